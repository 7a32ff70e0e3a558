"""Polynomials over a concrete algebra and their desk-scale invariants.

GeneralPolynomial is the working representation for products and division
intermediates; MonicPolynomial (implicit leading 1) is what extensions are
built from.  Resultants are Sylvester determinants computed division-free,
so they stay valid over coefficient algebras with non-invertible elements.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebras import (
    AlgebraDescriptor,
    Element,
    apply_character,
    divmod_monic_coeffs,
    max_coeff_abs,
    try_invert,
)
from .defaults import INVERT_COND_MAX, ROOT_TOL
from .errors import ShapeError
from .rootfinding import complex_roots_monic, distinct_roots_monic

_id_counter = itertools.count()


def _fresh_id(prefix="x"):
    return f"{prefix}{next(_id_counter)}"


class GeneralPolynomial:
    """Polynomial with coefficients in one algebra, any leading coefficient.

    Trailing coefficients that are exact structural zeros are trimmed; the
    zero polynomial has an empty coefficient list.
    """

    def __init__(self, algebra, coeffs):
        coeffs = list(coeffs)
        for c in coeffs:
            algebra.check_element(c)
        while coeffs and max_coeff_abs(coeffs[-1]) == 0.0:
            coeffs.pop()
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        """Degree of the trimmed polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def evaluate(self, y):
        """Horner evaluation at an element y of the same algebra."""
        alg = self.algebra
        acc = alg.zero()
        for c in reversed(self.coeffs):
            acc = alg.add(alg.mul(acc, y), c)
        return acc

    def __repr__(self):
        return f"GeneralPolynomial(deg {self.degree} over {self.algebra!r})"


class MonicPolynomial:
    """Monic polynomial a_0 + ... + a_{n-1} x^{n-1} + x^n over an algebra.

    Only the n low coefficients are stored.  Each instance carries an
    indeterminate id; polynomials entering one multivariate extension must
    have distinct ids.
    """

    def __init__(self, algebra, coeffs, indeterminate_id=None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ShapeError("a monic polynomial needs degree >= 1")
        for c in coeffs:
            algebra.check_element(c)
        self.algebra = algebra
        self.coeffs = tuple(coeffs)
        self.indeterminate_id = (
            _fresh_id() if indeterminate_id is None else str(indeterminate_id)
        )

    @property
    def degree(self):
        return len(self.coeffs)

    def as_general(self):
        return GeneralPolynomial(
            self.algebra, list(self.coeffs) + [self.algebra.one()]
        )

    def derivative(self):
        """Formal derivative, as a general polynomial (leading n * 1)."""
        alg = self.algebra
        coeffs = [
            alg.scale(k, c) for k, c in enumerate(self.coeffs) if k >= 1
        ]
        coeffs.append(alg.scale(self.degree, alg.one()))
        return GeneralPolynomial(alg, coeffs)

    @classmethod
    def from_scalars(cls, algebra, scalar_coeffs, indeterminate_id=None):
        """Monic polynomial with constant coefficients."""
        coeffs = [algebra.from_scalar(c) for c in scalar_coeffs]
        return cls(algebra, coeffs, indeterminate_id)

    def __repr__(self):
        return (
            f"MonicPolynomial({self.indeterminate_id}, deg {self.degree} "
            f"over {self.algebra!r})"
        )


def _same_algebra(p, q):
    if p.algebra is not q.algebra:
        raise ShapeError("polynomials live over different algebras")


def poly_add(p: GeneralPolynomial, q: GeneralPolynomial) -> GeneralPolynomial:
    _same_algebra(p, q)
    alg = p.algebra
    n = max(len(p.coeffs), len(q.coeffs))
    out = []
    for k in range(n):
        a = p.coeffs[k] if k < len(p.coeffs) else alg.zero()
        b = q.coeffs[k] if k < len(q.coeffs) else alg.zero()
        out.append(alg.add(a, b))
    return GeneralPolynomial(alg, out)


def poly_mul(p: GeneralPolynomial, q: GeneralPolynomial) -> GeneralPolynomial:
    """Convolution product; degrees add."""
    _same_algebra(p, q)
    alg = p.algebra
    if p.is_zero() or q.is_zero():
        return GeneralPolynomial(alg, [])
    out = [alg.zero() for _ in range(len(p.coeffs) + len(q.coeffs) - 1)]
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            out[i + j] = alg.add(out[i + j], alg.mul(a, b))
    return GeneralPolynomial(alg, out)


def reduce_mod_monic(p: GeneralPolynomial, alpha: MonicPolynomial):
    """Euclidean reduction of p modulo alpha.

    Returns (r, h) with p = alpha * h + r and deg r < deg alpha; alpha being
    monic, no coefficient of the algebra ever needs to be inverted.
    """
    if p.algebra is not alpha.algebra:
        raise ShapeError("polynomial and modulus live over different algebras")
    alg = p.algebra
    h, r = divmod_monic_coeffs(list(p.coeffs), list(alpha.coeffs), alg)
    return GeneralPolynomial(alg, r), GeneralPolynomial(alg, h)


def char_image_poly(alpha: MonicPolynomial, omega) -> np.ndarray:
    """Complex monic polynomial obtained by applying a character coefficientwise.

    Returns the low coefficients (omega(a_0), ..., omega(a_{n-1})); the
    leading 1 stays implicit.
    """
    return np.array(
        [apply_character(omega, c) for c in alpha.coeffs], dtype=complex
    )


def complex_roots(coeffs) -> np.ndarray:
    """All roots (with multiplicity) of a complex monic polynomial.

    coeffs are the low coefficients a_0..a_{n-1}; the leading coefficient
    is 1.  See rootfinding for the algorithm and the residual contract.
    """
    return complex_roots_monic(coeffs)


def distinct_complex_roots(coeffs, tol=ROOT_TOL):
    """Clustered (root, multiplicity) pairs for a complex monic polynomial."""
    return distinct_roots_monic(coeffs, tol=tol)


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------

def sylvester_matrix(p: GeneralPolynomial, q: GeneralPolynomial):
    """Sylvester matrix of p and q as a nested list of algebra elements.

    Layout: deg(q) rows of p's coefficients (highest first), then deg(p)
    rows of q's, each shifted one column per row.
    """
    _same_algebra(p, q)
    if p.is_zero() or q.is_zero():
        raise ShapeError("resultant needs nonzero polynomials")
    alg = p.algebra
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    p_desc = list(reversed(p.coeffs))
    q_desc = list(reversed(q.coeffs))
    for i in range(n):
        row = [alg.zero()] * size
        for j, c in enumerate(p_desc):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [alg.zero()] * size
        for j, c in enumerate(q_desc):
            row[i + j] = c
        rows.append(row)
    return rows


def _berkowitz_vector(m, alg):
    """Characteristic-polynomial coefficients of m (det(xI - m), descending).

    Division-free: only ring operations of the coefficient algebra are used.
    """
    n = len(m)
    if n == 0:
        return [alg.one()]
    if n == 1:
        return [alg.one(), alg.neg(m[0][0])]
    a = m[0][0]
    row = m[0][1:]
    col = [r[0] for r in m[1:]]
    inner = [r[1:] for r in m[1:]]
    items = [alg.one(), alg.neg(a)]
    vec = col
    for _ in range(n - 1):
        dot = alg.zero()
        for x, y in zip(row, vec):
            dot = alg.add(dot, alg.mul(x, y))
        items.append(alg.neg(dot))
        vec = [
            _list_dot(r, vec, alg) for r in inner
        ]
    prev = _berkowitz_vector(inner, alg)
    out = []
    for i in range(n + 1):
        acc = alg.zero()
        for j in range(n):
            k = i - j
            if 0 <= k < len(items):
                acc = alg.add(acc, alg.mul(items[k], prev[j]))
        out.append(acc)
    return out


def _list_dot(xs, ys, alg):
    acc = alg.zero()
    for x, y in zip(xs, ys):
        acc = alg.add(acc, alg.mul(x, y))
    return acc


def determinant(m, alg: AlgebraDescriptor) -> Element:
    """Division-free determinant of a square matrix of algebra elements."""
    n = len(m)
    if n == 0:
        return alg.one()
    char = _berkowitz_vector(m, alg)
    sign = 1.0 if n % 2 == 0 else -1.0
    return alg.scale(sign, char[-1])


def resultant_sylvester(p: GeneralPolynomial, q: GeneralPolynomial) -> Element:
    """Resultant of p and q: the Sylvester determinant.

    Sign convention: Res(x - a, x - b) = a - b.
    """
    return determinant(sylvester_matrix(p, q), p.algebra)


def discriminant(alpha: MonicPolynomial) -> Element:
    """Discriminant (-1)^(n(n-1)/2) Res(alpha, alpha'), monic convention."""
    n = alpha.degree
    if n < 2:
        raise ShapeError("discriminant needs degree >= 2")
    alg = alpha.algebra
    res = resultant_sylvester(alpha.as_general(), alpha.derivative())
    sign = -1.0 if (n * (n - 1) // 2) % 2 else 1.0
    return alg.scale(sign, res)


def is_separable(alpha: MonicPolynomial, cond_max=INVERT_COND_MAX) -> bool:
    """Whether the discriminant is invertible in the coefficient algebra.

    Degree-one polynomials are separable by convention.
    """
    if alpha.degree == 1:
        return True
    return try_invert(discriminant(alpha), alpha.algebra, cond_max) is not None
