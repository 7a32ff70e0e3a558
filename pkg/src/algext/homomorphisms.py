"""Unital homomorphisms between concrete algebras.

A Homomorphism wraps an application rule built from a handful of
primitives: base maps, coefficientwise lifts, root substitution and point
pullbacks.  The rule string records the composition for reports; the
unital flag is checked at construction by applying the map to one.
"""

from __future__ import annotations

import numpy as np

from .algebras import BaseFn, max_coeff_diff
from .errors import ShapeError


class Homomorphism:
    """Applicable unital map between algebra descriptors."""

    def __init__(self, domain, codomain, apply_fn, rule, check_unital=True):
        self.domain = domain
        self.codomain = codomain
        self._apply = apply_fn
        self.rule = rule
        self.unital = True
        if check_unital:
            defect = max_coeff_diff(apply_fn(domain.one()), codomain.one())
            self.unital = defect <= 1e-12
            if not self.unital:
                raise ShapeError(
                    f"map {rule!r} is not unital (defect {defect:.3g})"
                )

    def __call__(self, a):
        self.domain.check_element(a)
        return self._apply(a)

    def then(self, other: "Homomorphism") -> "Homomorphism":
        """Composition self followed by other."""
        if other.domain is not self.codomain:
            raise ShapeError("composition domains do not line up")
        return Homomorphism(
            self.domain,
            other.codomain,
            lambda a: other._apply(self._apply(a)),
            rule=f"{other.rule} . {self.rule}",
            check_unital=False,
        )

    def isometry_report(self, rng, samples=100, scale=1.0):
        """Sampled max ratio and max discrepancy of norms under the map."""
        max_ratio = 0.0
        max_abs = 0.0
        for _ in range(samples):
            a = self.domain.random_element(rng, scale)
            na = self.domain.norm(a)
            nb = self.codomain.norm(self._apply(a))
            if na > 0:
                max_ratio = max(max_ratio, nb / na)
            max_abs = max(max_abs, abs(nb - na))
        return {"max_ratio": max_ratio, "max_abs_discrepancy": max_abs}

    def multiplicativity_defect(self, rng, pairs=100, scale=1.0):
        """Sampled max of |phi(uv) - phi(u)phi(v)| relative to the scale."""
        worst = 0.0
        for _ in range(pairs):
            u = self.domain.random_element(rng, scale)
            v = self.domain.random_element(rng, scale)
            lhs = self._apply(self.domain.mul(u, v))
            rhs = self.codomain.mul(self._apply(u), self._apply(v))
            defect = max_coeff_diff(lhs, rhs)
            worst = max(worst, defect / (1.0 + self.codomain.norm(rhs)))
        return worst

    def __repr__(self):
        return f"Homomorphism({self.rule})"


def identity_hom(alg) -> Homomorphism:
    return Homomorphism(alg, alg, lambda a: a, rule="id", check_unital=False)


def embedding_hom(ext) -> Homomorphism:
    """The coefficient embedding nu of a simple or multivariate extension."""
    return Homomorphism(
        ext.base, ext, ext.embed, rule="embed", check_unital=False
    )


def character_hom(omega, alg, scalars_alg) -> Homomorphism:
    """A character omega of alg as a map onto the scalar algebra."""
    from .algebras import apply_character

    def apply_fn(a):
        return BaseFn([apply_character(omega, a)])

    return Homomorphism(
        alg, scalars_alg, apply_fn, rule=f"character({omega!r})"
    )


def pullback_hom(domain, codomain, index_map, rule="pullback") -> Homomorphism:
    """g -> g o pi for a point map pi given by codomain-to-domain indices."""
    index_map = np.asarray(index_map, dtype=int)

    def apply_fn(a):
        return BaseFn(a.values[index_map])

    return Homomorphism(domain, codomain, apply_fn, rule=rule, check_unital=False)
