"""Iterated and multivariate extensions over finite polynomial sets.

A finite ordered set of monic polynomials extends an algebra in two ways:

* StandardExtension -- fold the simple extension stage by stage, in order;
  the adjoined root of each polynomial lives in the top algebra via the
  chain of coefficient embeddings.
* NarmaniaExtension -- one multivariate quotient with minimal
  representatives per variable and the weighted l1 norm.

Both use the same norm parameter per polynomial; compare_standard_narmania
builds the canonical map between them and measures how isometric and
multiplicative it is.  Connecting embeddings realize the directed system
of multivariate extensions over nested polynomial sets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebras import (
    AlgebraDescriptor,
    Element,
    MultiCoeffs,
    MultiExt,
    max_coeff_diff,
    norm_param_slack,
)
from .arens_hoffman import (
    NormParamChoice,
    ah_extend,
    default_norm_param,
    induced_hom,
)
from .defaults import CHECK_TOL, RESIDUAL_TOL
from .errors import RootResidualError, ShapeError
from .homomorphisms import Homomorphism, embedding_hom, identity_hom
from .polynomials import MonicPolynomial


class PolySet:
    """Finite ordered set of monic polynomials with norm parameters.

    The list order is the well-order used for stagewise extension (least
    element first).  Polynomials must carry distinct indeterminate ids;
    norm parameters default to the minimal admissible choice.
    """

    def __init__(self, polys, ts=None):
        polys = list(polys)
        if not polys:
            raise ShapeError("polynomial set must be non-empty")
        ids = [p.indeterminate_id for p in polys]
        if len(set(ids)) != len(ids):
            raise ShapeError("indeterminate ids must be distinct")
        if ts is None:
            choices = [default_norm_param(p) for p in polys]
        else:
            ts = list(ts)
            if len(ts) != len(polys):
                raise ShapeError("one norm parameter per polynomial required")
            choices = []
            for p, t in zip(polys, ts):
                if t is None:
                    choices.append(default_norm_param(p))
                else:
                    choices.append(
                        NormParamChoice(
                            t=float(t),
                            provenance="user-supplied",
                            slack=norm_param_slack(p, float(t)),
                        )
                    )
        self.polys = tuple(polys)
        self.choices = tuple(choices)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(zip(self.polys, self.choices))

    def ids(self):
        return [p.indeterminate_id for p in self.polys]

    def subset_positions(self, other: "PolySet"):
        """Position of each of our polynomials inside other, or None."""
        positions = []
        for p in self.polys:
            pos = None
            for j, q in enumerate(other.polys):
                if q is p or (
                    q.indeterminate_id == p.indeterminate_id
                    and q.algebra is p.algebra
                    and len(q.coeffs) == len(p.coeffs)
                    and all(
                        max_coeff_diff(x, y) == 0.0
                        for x, y in zip(q.coeffs, p.coeffs)
                    )
                ):
                    pos = j
                    break
            if pos is None:
                return None
            positions.append(pos)
        return positions


class StandardExtension:
    """Chain of simple extensions, one stage per polynomial, in order."""

    def __init__(self, base, polyset: PolySet):
        self.base = base
        self.polyset = polyset
        self.stages = []
        current = base
        known = [base]
        for alpha, choice in polyset:
            lifted = self._lift_poly(alpha, known, current)
            stage = ah_extend(current, lifted, t=choice.t)
            stage.norm_param = choice
            self.stages.append(stage)
            known.append(stage)
            current = stage
        self.top = current
        self.roots = []
        for k, stage in enumerate(self.stages):
            xi = stage.root_element()
            for later in self.stages[k + 1 :]:
                xi = later.embed(xi)
            self.roots.append(xi)
        self._validate_roots()

    @staticmethod
    def _lift_poly(alpha, known, current):
        """Re-express alpha over the current top of the chain.

        Coefficients may live in the base or in any earlier stage; they are
        pushed up through the coefficient embeddings.
        """
        for depth, home in enumerate(known):
            if alpha.algebra is home:
                if home is current:
                    return alpha
                coeffs = []
                for c in alpha.coeffs:
                    x = c
                    for stage in known[depth + 1 :]:
                        x = stage.embed(x)
                    coeffs.append(x)
                return MonicPolynomial(
                    current, coeffs, indeterminate_id=alpha.indeterminate_id
                )
        raise ShapeError(
            f"polynomial {alpha.indeterminate_id} is not over the base "
            "or an earlier stage"
        )

    def _validate_roots(self):
        for (alpha, choice), xi in zip(self.polyset, self.roots):
            got = self.top.norm(xi)
            if alpha.degree > 1 and got != choice.t:
                raise ShapeError(
                    f"standard root of {alpha.indeterminate_id} has norm "
                    f"{got}, expected {choice.t}"
                )
            residual = self._eval_poly_at(alpha, xi)
            if residual > 1e-10:
                raise RootResidualError(
                    f"standard root of {alpha.indeterminate_id} does not "
                    "annihilate its polynomial",
                    residual,
                )

    def _eval_poly_at(self, alpha, y):
        """Norm of alpha evaluated at y in the top algebra."""
        top = self.top
        acc = top.zero()
        power = top.one()
        for c in alpha.coeffs:
            acc = top.add(acc, top.mul(self.embed_base_of(alpha, c), power))
            power = top.mul(power, y)
        acc = top.add(acc, power)
        return top.norm(acc)

    def embed_base_of(self, alpha, c):
        """Push a coefficient of alpha from its home algebra into the top."""
        homes = [self.base] + list(self.stages)
        for depth, home in enumerate(homes):
            if alpha.algebra is home:
                x = c
                for stage in self.stages[depth:]:
                    x = stage.embed(x)
                return x
        raise ShapeError("coefficient home not in the chain")

    def embed_base(self, a: Element) -> Element:
        """Embed a base element into the top algebra."""
        for stage in self.stages:
            a = stage.embed(a)
        return a

    def base_hom(self) -> Homomorphism:
        hom = identity_hom(self.base)
        for stage in self.stages:
            hom = hom.then(embedding_hom(stage))
        return hom

    @property
    def dim(self):
        return self.top.dim

    def describe(self):
        ids = ",".join(self.polyset.ids())
        return f"StandardExtension({ids} over {self.base.describe()})"


def standard_extend(base: AlgebraDescriptor, polyset: PolySet) -> StandardExtension:
    """Iterated simple extension of base by the ordered polynomial set."""
    return StandardExtension(base, polyset)


class NarmaniaExtension:
    """Multivariate extension with minimal representatives."""

    def __init__(self, base, polyset: PolySet):
        for alpha, _ in polyset:
            if alpha.algebra is not base:
                raise ShapeError(
                    "multivariate extensions need all polynomials over the base"
                )
        self.base = base
        self.polyset = polyset
        self.algebra = MultiExt(
            base, [(alpha, choice.t) for alpha, choice in polyset]
        )

    def embed(self, a: Element) -> Element:
        return self.algebra.embed(a)

    def base_hom(self) -> Homomorphism:
        return embedding_hom(self.algebra)

    def variable_class(self, j) -> Element:
        """The class of the j-th indeterminate in the quotient."""
        return self.algebra.variable_element(j)

    @property
    def dim(self):
        return self.algebra.dim

    def describe(self):
        ids = ",".join(self.polyset.ids())
        return f"NarmaniaExtension({ids} over {self.base.describe()})"


def narmania_extend(base: AlgebraDescriptor, polyset: PolySet) -> NarmaniaExtension:
    """Multivariate extension of base by a finite non-empty polynomial set."""
    return NarmaniaExtension(base, polyset)


def multi_reduce(table, polyset: PolySet, base=None) -> MultiCoeffs:
    """Minimal-representative table of a raw multivariate polynomial.

    table maps exponent tuples (one slot per polynomial, list order) to
    base elements; exponents may exceed the defining degrees and are
    rewritten variable by variable.  The result does not depend on the
    rewriting order (see the confluence test).
    """
    if base is None:
        base = polyset.polys[0].algebra
    ext = MultiExt(base, [(alpha, choice.t) for alpha, choice in polyset])
    raw = {}
    for s, c in table.items():
        s = tuple(int(e) for e in s)
        if len(s) != len(polyset):
            raise ShapeError(f"index {s} has wrong arity")
        if any(e < 0 for e in s):
            raise ShapeError(f"index {s} has negative exponents")
        base.check_element(c)
        raw[s] = base.add(raw[s], c) if s in raw else c
    return MultiCoeffs(ext.reduce_table(raw))


def connecting_embed(small, large) -> Homomorphism:
    """Isometric inclusion of the extension by S into the extension by T.

    small is a NarmaniaExtension (or the bare base algebra, playing the
    role of the empty polynomial set); large is a NarmaniaExtension whose
    polynomial set contains small's.  Coefficient tables are padded with
    zero exponents in the new variables, which leaves norms unchanged.
    """
    if isinstance(large, NarmaniaExtension):
        codomain = large.algebra
        large_set = large.polyset
    else:
        raise ShapeError("target of a connecting embedding must be multivariate")
    if isinstance(small, NarmaniaExtension):
        positions = small.polyset.subset_positions(large_set)
        if positions is None:
            raise ShapeError("polynomial sets are not nested")
        if small.base is not large.base:
            raise ShapeError("extensions have different bases")
        m = len(large_set)

        def apply_fn(a):
            table = {}
            for s, c in a.table.items():
                idx = [0] * m
                for j, e in enumerate(s):
                    idx[positions[j]] = e
                table[tuple(idx)] = c
            return MultiCoeffs(table)

        return Homomorphism(
            small.algebra,
            codomain,
            apply_fn,
            rule="pad-variables",
            check_unital=False,
        )
    # empty polynomial set: the extension of A by nothing is A itself
    if small is not large.base:
        raise ShapeError("extensions have different bases")
    return embedding_hom(codomain)


def induced_hom_multi(
    theta: Homomorphism,
    ext: StandardExtension,
    etas,
    residual_tol: float = RESIDUAL_TOL,
) -> Homomorphism:
    """Unique map off a standard extension fixing theta and the root images.

    theta maps the tower base into some algebra; etas, one per polynomial
    in order, are roots there of the theta-images of the polynomials.  The
    map is the stagewise fold of the simple-extension universal property.
    """
    etas = list(etas)
    if len(etas) != len(ext.polyset):
        raise ShapeError("one root image per polynomial required")
    phi = theta
    for stage, eta in zip(ext.stages, etas):
        try:
            phi = induced_hom(phi, stage, eta, residual_tol=residual_tol)
        except RootResidualError as err:
            raise RootResidualError(
                f"root image for {stage.alpha.indeterminate_id} fails",
                err.residual,
            ) from err
    return phi


@dataclass
class ComparisonReport:
    """Desk-scale isometry evidence for standard vs multivariate extensions."""

    ids: list
    ts: list
    dimension: int
    basis_max_norm_discrepancy: float
    basis_is_bijection: bool
    random_max_norm_discrepancy: float
    multiplicativity_defect: float
    samples: int
    seed: int
    check_tol: float = CHECK_TOL

    def passed(self, tol=None):
        tol = self.check_tol if tol is None else tol
        return (
            self.basis_is_bijection
            and self.basis_max_norm_discrepancy <= tol
            and self.random_max_norm_discrepancy <= tol
            and self.multiplicativity_defect <= tol
        )


def compare_standard_narmania(
    base: AlgebraDescriptor,
    polyset: PolySet,
    samples: int = 100,
    seed: int = 0,
    check_tol: float = CHECK_TOL,
) -> ComparisonReport:
    """Build both extensions and measure the canonical map between them.

    The map fixes the base and sends each standard root to the class of
    its variable.  It is checked to be a bijection on canonical bases,
    isometric there (exactly, up to float addition order) and on random
    elements, and multiplicative on random pairs.
    """
    std = standard_extend(base, polyset)
    nar = narmania_extend(base, polyset)
    theta = nar.base_hom()
    etas = [nar.variable_class(j) for j in range(len(polyset))]
    phi = induced_hom_multi(theta, std, etas)

    images = [phi(e) for e in std.top.basis()]
    nar_alg = nar.algebra
    seen = set()
    bijection = True
    basis_discrepancy = 0.0
    for e, img in zip(std.top.basis(), images):
        coords = nar_alg.coords(img)
        hot = int(np.argmax(np.abs(coords)))
        unit = np.zeros_like(coords)
        unit[hot] = 1.0
        if np.max(np.abs(coords - unit)) > 1e-12 or hot in seen:
            bijection = False
        seen.add(hot)
        basis_discrepancy = max(
            basis_discrepancy, abs(std.top.norm(e) - nar_alg.norm(img))
        )

    rng = np.random.default_rng(seed)
    random_discrepancy = 0.0
    mult_defect = 0.0
    for _ in range(samples):
        u = std.top.random_element(rng)
        v = std.top.random_element(rng)
        pu, pv = phi(u), phi(v)
        random_discrepancy = max(
            random_discrepancy, abs(std.top.norm(u) - nar_alg.norm(pu))
        )
        prod = nar_alg.mul(pu, pv)
        defect = max_coeff_diff(phi(std.top.mul(u, v)), prod)
        mult_defect = max(mult_defect, defect / (1.0 + nar_alg.norm(prod)))
    return ComparisonReport(
        ids=polyset.ids(),
        ts=[choice.t for choice in polyset.choices],
        dimension=std.top.dim,
        basis_max_norm_discrepancy=basis_discrepancy,
        basis_is_bijection=bijection and len(seen) == len(images),
        random_max_norm_discrepancy=random_discrepancy,
        multiplicativity_defect=mult_defect,
        samples=samples,
        seed=seed,
        check_tol=check_tol,
    )
