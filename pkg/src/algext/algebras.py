"""Concrete commutative, unital normed algebras and their elements.

Four kinds of algebra are materialized, all desk scale:

* FnAlg            -- every complex function on a finite point set, sup norm.
* SampledUniform   -- the subalgebra generated by named sample functions,
                      sup norm over the samples.
* AHExt            -- quotient of base[x] by a monic polynomial alpha, with
                      the weighted l1 norm  sum_k |b_k| t^k  on the unique
                      degree-reduced representatives.
* MultiExt         -- quotient by several monic polynomials in distinct
                      indeterminates, minimal representatives per variable,
                      norm  sum_s |q_s| prod_j t_j^{s_j}.

Elements mirror the recursion: BaseFn holds values per point, ExtCoeffs a
coefficient vector over the base, MultiCoeffs a multi-index table.  All
values are immutable after construction and every operation here is a pure
function, so everything is safe to use from concurrent contexts.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass

import numpy as np

from .defaults import INVERT_COND_MAX, NORM_PARAM_SLACK, RANK_RTOL, ROOT_TOL
from .errors import NormParamError, ShapeError
from .points import PointSet, single_point
from .rootfinding import distinct_roots_monic


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class BaseFn:
    """Function on the samples of a point-based algebra."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = np.asarray(values, dtype=complex)
        if values.ndim != 1:
            raise ShapeError("function values must form a 1-d vector")
        values = values.copy()
        values.flags.writeable = False
        self.values = values

    def __repr__(self):
        return f"BaseFn({np.array2string(self.values, precision=4)})"


class ExtCoeffs:
    """Degree-reduced representative sum_k coeffs[k] * xbar^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    def __repr__(self):
        return f"ExtCoeffs({list(self.coeffs)!r})"


class MultiCoeffs:
    """Minimal representative sum_s table[s] * x^s over several variables."""

    __slots__ = ("table",)

    def __init__(self, table):
        self.table = {tuple(int(i) for i in s): c for s, c in sorted(table.items())}

    def __repr__(self):
        return f"MultiCoeffs({self.table!r})"


Element = BaseFn | ExtCoeffs | MultiCoeffs


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

class BasePoint:
    """Evaluation at one sample point."""

    __slots__ = ("index",)

    def __init__(self, index):
        self.index = int(index)

    def key(self):
        return (self.index,)

    def __repr__(self):
        return f"BasePoint({self.index})"


class Lifted:
    """Character of a simple extension: base character plus a root value."""

    __slots__ = ("base", "lam")

    def __init__(self, base, lam):
        self.base = base
        self.lam = complex(lam)

    def key(self):
        return self.base.key() + (self.lam,)

    def __repr__(self):
        return f"Lifted({self.base!r}, {self.lam:.6g})"


class MultiLifted:
    """Character of a multivariate extension: base plus one root per variable."""

    __slots__ = ("base", "lambdas")

    def __init__(self, base, lambdas):
        self.base = base
        self.lambdas = tuple(complex(l) for l in lambdas)

    def key(self):
        return self.base.key() + self.lambdas

    def __repr__(self):
        return f"MultiLifted({self.base!r}, {list(self.lambdas)!r})"


Character = BasePoint | Lifted | MultiLifted


def apply_character(omega, a):
    """Value omega(a); recursion follows the shapes of character and element."""
    if isinstance(omega, BasePoint):
        if not isinstance(a, BaseFn):
            raise ShapeError("point character applied to a non-function element")
        return complex(a.values[omega.index])
    if isinstance(omega, Lifted):
        if not isinstance(a, ExtCoeffs):
            raise ShapeError("lifted character applied to a non-extension element")
        total = 0.0 + 0.0j
        power = 1.0 + 0.0j
        for b in a.coeffs:
            total += apply_character(omega.base, b) * power
            power *= omega.lam
        return total
    if isinstance(omega, MultiLifted):
        if not isinstance(a, MultiCoeffs):
            raise ShapeError("multi character applied to a non-table element")
        total = 0.0 + 0.0j
        for s, c in a.table.items():
            w = 1.0 + 0.0j
            for lam, e in zip(omega.lambdas, s):
                w *= lam ** e
            total += apply_character(omega.base, c) * w
        return total
    raise ShapeError(f"unknown character {omega!r}")


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------

class AlgebraDescriptor:
    """Common interface of the four algebra kinds.

    Descriptors are immutable; caches for bases, characters and spans are
    filled lazily and never observed in an inconsistent state.
    """

    def __init__(self):
        self._basis_cache = None
        self._char_cache = {}

    # -- structure --------------------------------------------------------

    @property
    def dim(self):
        raise NotImplementedError

    def check_element(self, a):
        raise NotImplementedError

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def scale(self, c, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def norm(self, a):
        raise NotImplementedError

    def neg(self, a):
        return self.scale(-1.0, a)

    def from_scalar(self, c):
        return self.scale(complex(c), self.one())

    def is_zero(self, a, tol=0.0):
        return max_coeff_abs(a) <= tol

    # -- canonical basis and coordinates -----------------------------------

    def basis(self):
        """Canonical basis: point indicators, tensored with monomials."""
        if self._basis_cache is None:
            self._basis_cache = tuple(self._build_basis())
        return self._basis_cache

    def _build_basis(self):
        raise NotImplementedError

    def coords(self, a):
        """Coordinates of a in the canonical basis, as a complex vector."""
        raise NotImplementedError

    def from_coords(self, vec):
        """Element with the given canonical coordinates."""
        raise NotImplementedError

    # -- characters ---------------------------------------------------------

    def characters(self, root_tol=ROOT_TOL):
        got = self._char_cache.get(root_tol)
        if got is None:
            got = tuple(self._build_characters(root_tol))
            self._char_cache[root_tol] = got
        return got

    def _build_characters(self, root_tol):
        raise NotImplementedError

    # -- sampling -----------------------------------------------------------

    def random_element(self, rng, scale=1.0):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError

    def __repr__(self):
        return self.describe()


class FnAlg(AlgebraDescriptor):
    """All complex functions on a finite point set, pointwise operations."""

    def __init__(self, points):
        super().__init__()
        if not isinstance(points, PointSet):
            points = PointSet(points)
        self.points = points

    @property
    def dim(self):
        return len(self.points)

    def check_element(self, a):
        if not isinstance(a, BaseFn) or len(a.values) != len(self.points):
            raise ShapeError(f"element {a!r} is not a function on {self.points!r}")

    def zero(self):
        return BaseFn(np.zeros(len(self.points), dtype=complex))

    def one(self):
        return BaseFn(np.ones(len(self.points), dtype=complex))

    def add(self, a, b):
        return BaseFn(a.values + b.values)

    def sub(self, a, b):
        return BaseFn(a.values - b.values)

    def scale(self, c, a):
        return BaseFn(complex(c) * a.values)

    def mul(self, a, b):
        return BaseFn(a.values * b.values)

    def norm(self, a):
        return float(np.max(np.abs(a.values)))

    def _build_basis(self):
        eye = np.eye(len(self.points), dtype=complex)
        return [BaseFn(row) for row in eye]

    def coords(self, a):
        return np.array(a.values)

    def from_coords(self, vec):
        return BaseFn(vec)

    def _build_characters(self, root_tol):
        return [BasePoint(i) for i in range(len(self.points))]

    def random_element(self, rng, scale=1.0):
        n = len(self.points)
        return BaseFn(scale * (rng.standard_normal(n) + 1j * rng.standard_normal(n)))

    def element_from_values(self, values):
        a = BaseFn(values)
        self.check_element(a)
        return a

    def coordinate_element(self, axis=0):
        """The sampled coordinate function as an element."""
        return BaseFn(self.points.coordinate(axis))

    def describe(self):
        return f"FnAlg({len(self.points)} points)"


class SampledUniform(FnAlg):
    """Subalgebra of the sampled functions generated by named generators.

    Elements are represented by their sample values, exactly like FnAlg;
    the generators matter for the span diagnostics (triviality, membership
    residuals).  The constant 1 is always part of the span.  Characters are
    declared to be the sample evaluations; for a sampled algebra this
    naturality is an assumption, reported rather than checked.
    """

    def __init__(self, points, generators, span_degree_cap=8):
        super().__init__(points)
        gens = []
        seen = set()
        for name, values in generators:
            name = str(name)
            if name in seen:
                raise ShapeError(f"duplicate generator name {name!r}")
            seen.add(name)
            values = np.asarray(values, dtype=complex).copy()
            if values.shape != (len(self.points),):
                raise ShapeError(f"generator {name!r} has wrong sample count")
            values.flags.writeable = False
            gens.append((name, values))
        self.generators = tuple(gens)
        self.span_degree_cap = int(span_degree_cap)
        if self.span_degree_cap < 1:
            raise ShapeError("span degree cap must be positive")
        self._span_cache = None

    def generator_element(self, name):
        for gname, values in self.generators:
            if gname == name:
                return BaseFn(values)
        raise KeyError(name)

    def span_basis(self):
        """Orthonormal basis (columns) of the sampled generator span.

        Monomials in the generators are orthonormalized in increasing total
        degree up to span_degree_cap, stopping early once the span is all of
        the sampled functions.
        """
        if self._span_cache is None:
            self._span_cache = self._build_span()
        return self._span_cache

    def _build_span(self):
        npts = len(self.points)
        cols = []
        gen_values = [v for _, v in self.generators]
        for degree in range(self.span_degree_cap + 1):
            if len(cols) >= npts:
                break
            for combo in itertools.combinations_with_replacement(
                range(len(gen_values)), degree
            ):
                vec = np.ones(npts, dtype=complex)
                for g in combo:
                    vec = vec * gen_values[g]
                _mgs_append(cols, vec)
                if len(cols) >= npts:
                    break
        if cols:
            return np.column_stack(cols)
        return np.zeros((npts, 0), dtype=complex)

    def span_rank(self):
        return self.span_basis().shape[1]

    def describe(self):
        names = ",".join(name for name, _ in self.generators)
        return f"SampledUniform({len(self.points)} points; gens {names})"


def _mgs_append(cols, vec):
    """Append vec to the orthonormal column list unless it is dependent."""
    original = float(np.linalg.norm(vec))
    if original == 0.0:
        return False
    for _ in range(2):  # one re-orthogonalization pass for stability
        for q in cols:
            vec = vec - q * np.vdot(q, vec)
    residual = float(np.linalg.norm(vec))
    if residual <= 1e-10 * (1.0 + original):
        return False
    cols.append(vec / residual)
    return True


class AHExt(AlgebraDescriptor):
    """Simple extension base[x]/(alpha(x)) with norm parameter t.

    The inequality t^n >= sum_k |a_k| t^k is validated on construction; the
    slack is kept for reporting.
    """

    def __init__(self, base, alpha, t):
        super().__init__()
        if alpha.algebra is not base:
            raise ShapeError("polynomial is not over the base algebra")
        self.base = base
        self.alpha = alpha
        self.t = float(t)
        if self.t <= 0:
            raise NormParamError("norm parameter must be positive", self.t)
        self.slack = norm_param_slack(alpha, self.t)
        if self.slack < NORM_PARAM_SLACK:
            raise NormParamError(
                f"t={self.t} violates the norm-parameter inequality", self.slack
            )

    @property
    def degree(self):
        return self.alpha.degree

    @property
    def dim(self):
        return self.degree * self.base.dim

    def check_element(self, a):
        if not isinstance(a, ExtCoeffs) or len(a.coeffs) != self.degree:
            raise ShapeError(
                f"element {a!r} is not a degree-{self.degree} coefficient vector"
            )
        for c in a.coeffs:
            self.base.check_element(c)

    def zero(self):
        z = self.base.zero()
        return ExtCoeffs([z] * self.degree)

    def one(self):
        coeffs = [self.base.one()] + [self.base.zero()] * (self.degree - 1)
        return ExtCoeffs(coeffs)

    def root_element(self):
        """The adjoined root xbar (zero of alpha in this algebra)."""
        if self.degree == 1:
            # x = -a_0 modulo a degree-one polynomial
            return ExtCoeffs([self.base.neg(self.alpha.coeffs[0])])
        coeffs = [self.base.zero()] * self.degree
        coeffs[1] = self.base.one()
        return ExtCoeffs(coeffs)

    def embed(self, a):
        """nu(a) = (a, 0, ..., 0); unital and exactly isometric."""
        self.base.check_element(a)
        return ExtCoeffs([a] + [self.base.zero()] * (self.degree - 1))

    def add(self, a, b):
        return ExtCoeffs(
            [self.base.add(x, y) for x, y in zip(a.coeffs, b.coeffs)]
        )

    def sub(self, a, b):
        return ExtCoeffs(
            [self.base.sub(x, y) for x, y in zip(a.coeffs, b.coeffs)]
        )

    def scale(self, c, a):
        return ExtCoeffs([self.base.scale(c, x) for x in a.coeffs])

    def mul(self, a, b):
        prod = _convolve(list(a.coeffs), list(b.coeffs), self.base)
        _, rem = divmod_monic_coeffs(prod, self.alpha.coeffs, self.base)
        rem = rem + [self.base.zero()] * (self.degree - len(rem))
        return ExtCoeffs(rem[: self.degree])

    def norm(self, a):
        total = 0.0
        for k, c in enumerate(a.coeffs):
            total += self.base.norm(c) * self.t**k
        return total

    def _build_basis(self):
        out = []
        for k in range(self.degree):
            for e in self.base.basis():
                coeffs = [self.base.zero()] * self.degree
                coeffs[k] = e
                out.append(ExtCoeffs(coeffs))
        return out

    def coords(self, a):
        return np.concatenate([self.base.coords(c) for c in a.coeffs])

    def from_coords(self, vec):
        d = self.base.dim
        coeffs = [
            self.base.from_coords(np.asarray(vec)[k * d : (k + 1) * d])
            for k in range(self.degree)
        ]
        return ExtCoeffs(coeffs)

    def _build_characters(self, root_tol):
        out = []
        for omega in self.base.characters(root_tol):
            img = [apply_character(omega, c) for c in self.alpha.coeffs]
            for lam, _mult in distinct_roots_monic(img, tol=root_tol):
                out.append(Lifted(omega, lam))
        return out

    def random_element(self, rng, scale=1.0):
        return ExtCoeffs(
            [self.base.random_element(rng, scale) for _ in range(self.degree)]
        )

    def describe(self):
        return (
            f"AHExt(deg {self.degree}, t={self.t:.6g}, base={self.base.describe()})"
        )


class MultiExt(AlgebraDescriptor):
    """Extension by several monic polynomials in distinct indeterminates.

    Elements are tables of minimal multi-indices; products are multivariate
    convolutions reduced variable by variable.
    """

    def __init__(self, base, polys):
        super().__init__()
        polys = tuple((alpha, float(t)) for alpha, t in polys)
        if not polys:
            raise ShapeError("a multivariate extension needs at least one polynomial")
        ids = [alpha.indeterminate_id for alpha, _ in polys]
        if len(set(ids)) != len(ids):
            raise ShapeError("indeterminate ids must be distinct")
        for alpha, t in polys:
            if alpha.algebra is not base:
                raise ShapeError("polynomial is not over the base algebra")
            slack = norm_param_slack(alpha, t)
            if slack < NORM_PARAM_SLACK:
                raise NormParamError(
                    f"t={t} violates the norm-parameter inequality for "
                    f"{alpha.indeterminate_id}",
                    slack,
                )
        self.base = base
        self.polys = polys
        self.degrees = tuple(alpha.degree for alpha, _ in polys)
        self._power_cache = {}

    @property
    def nvars(self):
        return len(self.polys)

    @property
    def dim(self):
        d = self.base.dim
        for n in self.degrees:
            d *= n
        return d

    def check_element(self, a):
        if not isinstance(a, MultiCoeffs):
            raise ShapeError(f"element {a!r} is not a multi-index table")
        for s, c in a.table.items():
            if len(s) != self.nvars:
                raise ShapeError(f"index {s} has wrong arity")
            if any(e < 0 or e >= n for e, n in zip(s, self.degrees)):
                raise ShapeError(f"index {s} is not minimal")
            self.base.check_element(c)

    def zero(self):
        return MultiCoeffs({})

    def one(self):
        return MultiCoeffs({(0,) * self.nvars: self.base.one()})

    def variable_element(self, j):
        """The class of the j-th indeterminate."""
        if self.degrees[j] == 1:
            alpha = self.polys[j][0]
            return MultiCoeffs(
                {(0,) * self.nvars: self.base.neg(alpha.coeffs[0])}
            )
        s = [0] * self.nvars
        s[j] = 1
        return MultiCoeffs({tuple(s): self.base.one()})

    def embed(self, a):
        self.base.check_element(a)
        if self.base.is_zero(a):
            return MultiCoeffs({})
        return MultiCoeffs({(0,) * self.nvars: a})

    def add(self, a, b):
        table = dict(a.table)
        for s, c in b.table.items():
            table[s] = self.base.add(table[s], c) if s in table else c
        return MultiCoeffs(_drop_zeros(table, self.base))

    def sub(self, a, b):
        return self.add(a, self.scale(-1.0, b))

    def scale(self, c, a):
        c = complex(c)
        if c == 0:
            return MultiCoeffs({})
        return MultiCoeffs({s: self.base.scale(c, v) for s, v in a.table.items()})

    def mul(self, a, b):
        conv = {}
        for s, c in a.table.items():
            for t, d in b.table.items():
                idx = tuple(x + y for x, y in zip(s, t))
                prod = self.base.mul(c, d)
                conv[idx] = self.base.add(conv[idx], prod) if idx in conv else prod
        return MultiCoeffs(self.reduce_table(conv))

    def reduce_table(self, table):
        """Rewrite a raw multi-index table to minimal exponents.

        Works one variable at a time; replacing x_j^e (e >= n_j) by its
        degree-reduced representative never raises exponents of the other
        variables, so a single sweep suffices.
        """
        for j in range(self.nvars):
            n = self.degrees[j]
            out = {}
            for s, c in table.items():
                if s[j] < n:
                    _accumulate(out, s, c, self.base)
                    continue
                rep = self._power_rep(j, s[j])
                for k, r in enumerate(rep):
                    if self.base.is_zero(r):
                        continue
                    idx = s[:j] + (k,) + s[j + 1 :]
                    _accumulate(out, idx, self.base.mul(c, r), self.base)
            table = out
        return _drop_zeros(table, self.base)

    def _power_rep(self, j, e):
        """Coefficients of x_j^e reduced modulo the j-th polynomial."""
        key = (j, e)
        got = self._power_cache.get(key)
        if got is None:
            alpha = self.polys[j][0]
            mono = [self.base.zero()] * e + [self.base.one()]
            _, rem = divmod_monic_coeffs(mono, alpha.coeffs, self.base)
            got = tuple(rem + [self.base.zero()] * (alpha.degree - len(rem)))
            self._power_cache[key] = got
        return got

    def norm(self, a):
        total = 0.0
        for s, c in a.table.items():
            w = 1.0
            for t, e in zip((t for _, t in self.polys), s):
                w *= t**e
            total += self.base.norm(c) * w
        return total

    def index_box(self):
        return list(itertools.product(*[range(n) for n in self.degrees]))

    def _build_basis(self):
        out = []
        for s in self.index_box():
            for e in self.base.basis():
                out.append(MultiCoeffs({s: e}))
        return out

    def coords(self, a):
        d = self.base.dim
        blocks = []
        zero = np.zeros(d, dtype=complex)
        for s in self.index_box():
            c = a.table.get(s)
            blocks.append(zero if c is None else self.base.coords(c))
        return np.concatenate(blocks)

    def from_coords(self, vec):
        d = self.base.dim
        vec = np.asarray(vec)
        table = {}
        for i, s in enumerate(self.index_box()):
            c = self.base.from_coords(vec[i * d : (i + 1) * d])
            if not self.base.is_zero(c):
                table[s] = c
        return MultiCoeffs(table)

    def _build_characters(self, root_tol):
        out = []
        for omega in self.base.characters(root_tol):
            per_var = []
            for alpha, _ in self.polys:
                img = [apply_character(omega, c) for c in alpha.coeffs]
                per_var.append(
                    [lam for lam, _m in distinct_roots_monic(img, tol=root_tol)]
                )
            for lambdas in itertools.product(*per_var):
                out.append(MultiLifted(omega, lambdas))
        return out

    def random_element(self, rng, scale=1.0):
        table = {
            s: self.base.random_element(rng, scale) for s in self.index_box()
        }
        return MultiCoeffs(table)

    def describe(self):
        ids = ",".join(str(alpha.indeterminate_id) for alpha, _ in self.polys)
        return f"MultiExt(vars {ids}, base={self.base.describe()})"


# ---------------------------------------------------------------------------
# shared coefficient plumbing
# ---------------------------------------------------------------------------

def _convolve(p, q, alg):
    """Coefficient convolution of two coefficient lists over alg."""
    if not p or not q:
        return []
    out = [alg.zero() for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = alg.add(out[i + j], alg.mul(a, b))
    return out


def divmod_monic_coeffs(p, alpha_coeffs, alg):
    """Euclidean division of p by the monic polynomial with low coefficients
    alpha_coeffs, over the algebra alg.

    Returns (h, r) with p = alpha * h + r and len(r) <= len(alpha_coeffs).
    Monic divisors need no coefficient inversions.
    """
    n = len(alpha_coeffs)
    r = list(p)
    if len(r) <= n:
        return [], r
    h = [alg.zero()] * (len(r) - n)
    for d in range(len(r) - 1, n - 1, -1):
        c = r[d]
        h[d - n] = c
        r[d] = alg.zero()
        if alg.is_zero(c):
            continue
        for k in range(n):
            r[d - n + k] = alg.sub(r[d - n + k], alg.mul(c, alpha_coeffs[k]))
    return h, r[:n]


def _accumulate(table, idx, value, alg):
    table[idx] = alg.add(table[idx], value) if idx in table else value


def _drop_zeros(table, alg):
    return {s: c for s, c in table.items() if not alg.is_zero(c)}


def max_coeff_abs(a):
    """Largest coefficient magnitude in the recursive representation."""
    if isinstance(a, BaseFn):
        return float(np.max(np.abs(a.values))) if a.values.size else 0.0
    if isinstance(a, ExtCoeffs):
        return max((max_coeff_abs(c) for c in a.coeffs), default=0.0)
    if isinstance(a, MultiCoeffs):
        return max((max_coeff_abs(c) for c in a.table.values()), default=0.0)
    raise ShapeError(f"not an element: {a!r}")


def max_coeff_diff(a, b):
    """Largest coefficientwise difference between two same-shaped elements."""
    if isinstance(a, BaseFn) and isinstance(b, BaseFn):
        return float(np.max(np.abs(a.values - b.values)))
    if isinstance(a, ExtCoeffs) and isinstance(b, ExtCoeffs):
        return max(max_coeff_diff(x, y) for x, y in zip(a.coeffs, b.coeffs))
    if isinstance(a, MultiCoeffs) and isinstance(b, MultiCoeffs):
        keys = set(a.table) | set(b.table)
        worst = 0.0
        for s in keys:
            x = a.table.get(s)
            y = b.table.get(s)
            if x is None:
                worst = max(worst, max_coeff_abs(y))
            elif y is None:
                worst = max(worst, max_coeff_abs(x))
            else:
                worst = max(worst, max_coeff_diff(x, y))
        return worst
    raise ShapeError(f"elements {a!r} and {b!r} have different shapes")


def norm_param_slack(alpha, t):
    """Slack t^n - sum_k |a_k| t^k of the norm-parameter inequality."""
    base = alpha.algebra
    total = 0.0
    for k, c in enumerate(alpha.coeffs):
        total += base.norm(c) * t**k
    return t**alpha.degree - total


# ---------------------------------------------------------------------------
# spec-level operations
# ---------------------------------------------------------------------------

_SCALARS = None


def scalars():
    """The complex numbers, materialized as functions on one point."""
    global _SCALARS
    if _SCALARS is None:
        _SCALARS = FnAlg(single_point())
    return _SCALARS


def algebra_mul(a, b, alg):
    """Product in alg; extensions return the unique reduced representative."""
    alg.check_element(a)
    alg.check_element(b)
    return alg.mul(a, b)


def algebra_norm(a, alg):
    """Norm of a in alg (sup norm or the weighted l1 extension norm)."""
    alg.check_element(a)
    return alg.norm(a)


def try_invert(a, alg, cond_max=INVERT_COND_MAX):
    """Inverse of a in alg, or None when a is not invertible.

    Pointwise reciprocal on function algebras; otherwise solves the linear
    system of the multiplication-by-a operator on the canonical basis.  The
    operator is deemed singular above the condition threshold.  On a
    SampledUniform algebra the reciprocal is the pointwise one and may fall
    outside the generator span; it is approximate in that sense.
    """
    alg.check_element(a)
    if isinstance(a, BaseFn):
        mags = np.abs(a.values)
        low = float(np.min(mags))
        high = float(np.max(mags))
        if low == 0.0 or high / low > cond_max:
            return None
        return BaseFn(1.0 / a.values)
    basis = alg.basis()
    m = np.column_stack([alg.coords(alg.mul(a, e)) for e in basis])
    cond = np.linalg.cond(m)
    if not np.isfinite(cond) or cond > cond_max:
        return None
    target = alg.coords(alg.one())
    x = np.linalg.solve(m, target)
    x += np.linalg.solve(m, target - m @ x)  # one step of refinement
    return alg.from_coords(x)


def characters(alg, root_tol=ROOT_TOL):
    """All characters of alg, base points lifted through every extension."""
    return list(alg.characters(root_tol))


def gelfand_transform(a, alg, root_tol=ROOT_TOL):
    """Vector of omega(a) over characters(alg), in enumeration order."""
    alg.check_element(a)
    return np.array(
        [apply_character(omega, a) for omega in alg.characters(root_tol)],
        dtype=complex,
    )


def gelfand_matrix(alg, root_tol=ROOT_TOL):
    """Matrix of the transform: rows canonical basis, columns characters."""
    chars = alg.characters(root_tol)
    basis = alg.basis()
    out = np.zeros((len(basis), len(chars)), dtype=complex)
    for i, e in enumerate(basis):
        for j, omega in enumerate(chars):
            out[i, j] = apply_character(omega, e)
    return out


@dataclass
class SemisimpleReport:
    """Outcome of the Gelfand-rank test with its numeric evidence."""

    semisimple: bool
    dimension: int
    rank: int
    num_characters: int
    sv_max: float
    threshold: float

    def __bool__(self):
        return self.semisimple


def check_top_semisimple(alg, root_tol=ROOT_TOL, rank_rtol=RANK_RTOL):
    """Whether the Gelfand transform is injective, by numerical rank."""
    g = gelfand_matrix(alg, root_tol)
    sv = np.linalg.svd(g, compute_uv=False)
    sv_max = float(sv[0]) if sv.size else 0.0
    threshold = rank_rtol * sv_max
    rank = int(np.sum(sv > threshold)) if sv.size else 0
    return SemisimpleReport(
        semisimple=(rank == alg.dim),
        dimension=alg.dim,
        rank=rank,
        num_characters=g.shape[1],
        sv_max=sv_max,
        threshold=threshold,
    )
