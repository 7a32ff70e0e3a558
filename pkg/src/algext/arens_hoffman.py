"""Simple algebraic extensions: norm parameters, embeddings, induced maps.

The extension of an algebra by a monic polynomial alpha carries the
weighted l1 norm with parameter t; any t with t^n >= sum_k |a_k| t^k is
admissible.  The default parameter is the smallest admissible one, the
unique positive root of t^n = sum_k |a_k| t^k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebras import AHExt, AlgebraDescriptor, Element, norm_param_slack
from .defaults import NORM_PARAM_BISECT_TOL, RESIDUAL_TOL
from .errors import RootResidualError, ShapeError
from .homomorphisms import Homomorphism, embedding_hom
from .polynomials import MonicPolynomial

__all__ = [
    "NormParamChoice",
    "default_norm_param",
    "ah_extend",
    "ah_embed",
    "ah_root",
    "embedding_hom",
    "induced_hom",
    "induced_hom_uniqueness_defect",
    "root_residual",
    "continuity_bound",
]


@dataclass(frozen=True)
class NormParamChoice:
    """A validated norm parameter with its provenance and slack."""

    t: float
    provenance: str  # "default-computed" | "user-supplied"
    slack: float


def default_norm_param(alpha: MonicPolynomial) -> NormParamChoice:
    """Smallest admissible norm parameter for alpha.

    If every coefficient has norm zero any positive t works and 1 is
    returned.  Otherwise t^n - sum_k |a_k| t^k has a single sign change on
    (0, inf); bisection brackets the root and a short Newton polish lands
    on it to machine accuracy (so exact roots like t=1 come out exact).
    """
    base = alpha.algebra
    n = alpha.degree
    norms = [base.norm(c) for c in alpha.coeffs]
    if all(v == 0.0 for v in norms):
        return NormParamChoice(t=1.0, provenance="default-computed", slack=1.0)

    def gap(t):
        total = 0.0
        for k, v in enumerate(norms):
            total += v * t**k
        return t**n - total

    def gap_slope(t):
        total = 0.0
        for k, v in enumerate(norms):
            if k >= 1:
                total += k * v * t ** (k - 1)
        return n * t ** (n - 1) - total

    lo = max(
        1e-6,
        max(v ** (1.0 / (n - k)) for k, v in enumerate(norms) if v > 0) / n,
    )
    hi = 1.0 + sum(norms)
    while gap(lo) > 0.0 and lo > 1e-300:
        lo /= 2.0
    while hi - lo > NORM_PARAM_BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if gap(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    for _ in range(8):
        slope = gap_slope(t)
        if slope == 0.0:
            break
        step = gap(t) / slope
        if t - step <= 0.0:
            break
        t -= step
        if abs(step) < 1e-18 * t:
            break
    while norm_param_slack(alpha, t) < 0.0:
        t = np.nextafter(t, np.inf)
    return NormParamChoice(
        t=float(t), provenance="default-computed", slack=norm_param_slack(alpha, t)
    )


def ah_extend(
    base: AlgebraDescriptor, alpha: MonicPolynomial, t: float | None = None
) -> AHExt:
    """Extension of base by alpha with a validated norm parameter.

    A supplied t is validated against the norm-parameter inequality (the
    descriptor constructor raises, carrying the slack); t=None selects the
    default parameter.  The dimension multiplies by deg alpha.
    """
    if t is None:
        choice = default_norm_param(alpha)
    else:
        choice = NormParamChoice(
            t=float(t),
            provenance="user-supplied",
            slack=norm_param_slack(alpha, float(t)),
        )
    ext = AHExt(base, alpha, choice.t)
    ext.norm_param = choice
    return ext


def ah_embed(ext: AHExt, a: Element) -> Element:
    """nu(a): the coefficient vector (a, 0, ..., 0); exactly isometric."""
    return ext.embed(a)


def ah_root(ext: AHExt) -> Element:
    """xbar, the adjoined root of alpha in the extension."""
    return ext.root_element()


def _substitution_value(theta, coeffs, y, codomain):
    """sum theta(b_k) y^k via explicit powers."""
    total = codomain.zero()
    power = codomain.one()
    for b in coeffs:
        total = codomain.add(total, codomain.mul(theta(b), power))
        power = codomain.mul(power, y)
    return total


def _substitution_value_horner(theta, coeffs, y, codomain):
    """Same map, folded Horner-style; used as the independent uniqueness route."""
    acc = codomain.zero()
    for b in reversed(coeffs):
        acc = codomain.add(codomain.mul(acc, y), theta(b))
    return acc


def root_residual(theta: Homomorphism, alpha: MonicPolynomial, y: Element) -> float:
    """Norm of theta(alpha)(y) in theta's codomain."""
    codomain = theta.codomain
    value = _substitution_value(theta, list(alpha.coeffs), y, codomain)
    n = alpha.degree
    power = codomain.one()
    for _ in range(n):
        power = codomain.mul(power, y)
    return codomain.norm(codomain.add(value, power))


def induced_hom(
    theta: Homomorphism,
    ext: AHExt,
    y: Element,
    residual_tol: float = RESIDUAL_TOL,
) -> Homomorphism:
    """Unique map phi off the extension with phi o nu = theta, phi(xbar) = y.

    theta maps ext's base into some algebra containing a root y of the
    image of ext's defining polynomial; phi sends sum b_k xbar^k to
    sum theta(b_k) y^k.  The root residual is checked first and reported
    on failure.
    """
    if theta.domain is not ext.base:
        raise ShapeError("theta is not defined on the extension base")
    codomain = theta.codomain
    codomain.check_element(y)
    scale = 1.0 + max(
        (codomain.norm(theta(c)) for c in ext.alpha.coeffs), default=0.0
    )
    residual = root_residual(theta, ext.alpha, y)
    if residual > residual_tol * scale:
        raise RootResidualError(
            f"substitution target is not a root of the image of "
            f"{ext.alpha.indeterminate_id}",
            residual,
        )
    hom = Homomorphism(
        ext,
        codomain,
        lambda a: _substitution_value(theta, list(a.coeffs), y, codomain),
        rule=f"subst({ext.alpha.indeterminate_id}) . {theta.rule}",
        check_unital=False,
    )
    hom.root_image = y
    hom.root_residual_value = residual
    return hom


def induced_hom_uniqueness_defect(
    theta: Homomorphism, ext: AHExt, y: Element, elements
) -> float:
    """Max disagreement of the two substitution routes on given elements.

    Any homomorphism fixing the diagram is determined on the canonical
    basis; agreement of the powers route with the Horner route witnesses
    uniqueness numerically.
    """
    from .algebras import max_coeff_diff

    codomain = theta.codomain
    worst = 0.0
    for a in elements:
        lhs = _substitution_value(theta, list(a.coeffs), y, codomain)
        rhs = _substitution_value_horner(theta, list(a.coeffs), y, codomain)
        worst = max(worst, max_coeff_diff(lhs, rhs))
    return worst


def continuity_bound(ext: AHExt, phi: Homomorphism) -> float:
    """The constant max_k |phi(xbar)^k| / t^k bounding |phi(u)| / |u|."""
    codomain = phi.codomain
    y = phi.root_image
    best = 0.0
    power = codomain.one()
    for k in range(ext.degree):
        best = max(best, codomain.norm(power) / ext.t**k)
        power = codomain.mul(power, y)
    return best
