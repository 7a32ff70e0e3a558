"""Complex roots of monic polynomials and root clustering.

Monic polynomials are passed as the coefficient vector (a_0, ..., a_{n-1})
with an implicit leading 1.  The primary solver runs the simultaneous
Aberth-Ehrlich iteration; if it has not converged after ROOT_MAX_ITER
sweeps the companion-matrix eigenvalues take over.  Every emitted root z
must satisfy |p(z)| <= RESIDUAL_TOL * (1 + max |a_k|).
"""

from __future__ import annotations

import numpy as np

from .defaults import RESIDUAL_TOL, ROOT_MAX_ITER, ROOT_TOL
from .errors import RootFindingError


def _eval_with_derivative(coeffs, z):
    """Horner evaluation of the monic polynomial and its derivative at z."""
    p = np.ones_like(z)
    dp = np.zeros_like(z)
    for a in reversed(coeffs):
        dp = dp * z + p
        p = p * z + a
    return p, dp


def eval_monic(coeffs, z):
    """Value of the monic polynomial with low coefficients coeffs at z."""
    z = np.asarray(z, dtype=complex)
    p = np.ones_like(z)
    for a in reversed(coeffs):
        p = p * z + a
    return p


def _aberth(coeffs, max_iter):
    """Aberth-Ehrlich pass; returns roots or None when it fails to settle.

    Iterates until the corrections stagnate at machine level (or a
    near-machine residual is reached), then answers only if the contract
    residual bound holds.
    """
    n = len(coeffs)
    scale = 1.0 + max(abs(a) for a in coeffs)
    radius = scale
    centre = -coeffs[-1] / n
    angles = 2.0 * np.pi * np.arange(n) / n + 0.4
    z = centre + radius * np.exp(1j * angles) * (0.5 + 0.5 * np.arange(1, n + 1) / n)
    res_bound = RESIDUAL_TOL * scale
    tight = 100.0 * np.finfo(float).eps * scale
    for _ in range(max_iter):
        p, dp = _eval_with_derivative(coeffs, z)
        if np.max(np.abs(p)) <= tight:
            return z
        dp = np.where(dp == 0, np.finfo(float).eps, dp)
        w = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        diff = np.where(diff == 0, 1e-300, diff)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        denom = 1.0 - w * s
        denom = np.where(np.abs(denom) < 1e-300, 1e-300, denom)
        step = w / denom
        z = z - step
        if np.max(np.abs(step)) < 1e-15 * (1.0 + np.max(np.abs(z))):
            break
    p = eval_monic(coeffs, z)
    if np.max(np.abs(p)) <= res_bound:
        return z
    return None


def _companion_roots(coeffs):
    """Eigenvalues of the companion matrix (numpy.roots, highest first)."""
    return np.roots(np.concatenate(([1.0 + 0.0j], np.asarray(coeffs, dtype=complex)[::-1])))


def complex_roots_monic(coeffs, max_iter=ROOT_MAX_ITER):
    """All n roots (with multiplicity) of the monic polynomial.

    Exact trailing zeros of the coefficient vector are deflated first so a
    polynomial divisible by z^k reports k exact zero roots.  Raises
    RootFindingError when both methods miss the residual bound.
    """
    coeffs = [complex(a) for a in coeffs]
    n = len(coeffs)
    if n == 0:
        return np.array([], dtype=complex)
    zeros = 0
    while zeros < n and coeffs[zeros] == 0:
        zeros += 1
    deflated = coeffs[zeros:]
    if not deflated:
        return np.zeros(n, dtype=complex)
    if len(deflated) == 1:
        roots = np.array([-deflated[0]], dtype=complex)
    else:
        roots = _aberth(deflated, max_iter)
        if roots is None:
            roots = _companion_roots(deflated)
    res_bound = RESIDUAL_TOL * (1.0 + max(abs(a) for a in deflated))
    if np.max(np.abs(eval_monic(deflated, roots))) > res_bound:
        raise RootFindingError(coeffs)
    if zeros:
        roots = np.concatenate((np.zeros(zeros, dtype=complex), roots))
    return _sorted_roots(roots)


def _sorted_roots(roots):
    order = np.lexsort((roots.imag, roots.real))
    return roots[order]


def _aberth_batch(coeffs, max_iter):
    """Aberth-Ehrlich on many same-degree monic polynomials at once.

    coeffs is (P, n); rows must have nonzero constant term.  Returns the
    (P, n) root array and a per-row boolean mask of rows meeting the
    contract residual bound.
    """
    rows, n = coeffs.shape
    scale = 1.0 + np.max(np.abs(coeffs), axis=1)
    centre = -coeffs[:, -1] / n
    angles = 2.0 * np.pi * np.arange(n) / n + 0.4
    spread = 0.5 + 0.5 * np.arange(1, n + 1) / n
    z = centre[:, None] + scale[:, None] * np.exp(1j * angles)[None, :] * spread[None, :]
    tight = 100.0 * np.finfo(float).eps * scale
    eye = np.eye(n, dtype=bool)
    for _ in range(max_iter):
        p = np.ones_like(z)
        dp = np.zeros_like(z)
        for k in range(n - 1, -1, -1):
            dp = dp * z + p
            p = p * z + coeffs[:, k][:, None]
        if np.all(np.max(np.abs(p), axis=1) <= tight):
            break
        dp = np.where(dp == 0, np.finfo(float).eps, dp)
        w = p / dp
        diff = z[:, :, None] - z[:, None, :]
        diff[:, eye] = 1.0
        diff = np.where(diff == 0, 1e-300, diff)
        inv = 1.0 / diff
        inv[:, eye] = 0.0
        s = inv.sum(axis=2)
        denom = 1.0 - w * s
        denom = np.where(np.abs(denom) < 1e-300, 1e-300, denom)
        step = w / denom
        z = z - step
        if np.max(np.abs(step)) < 1e-15 * (1.0 + np.max(np.abs(z))):
            break
    p = np.ones_like(z)
    for k in range(n - 1, -1, -1):
        p = p * z + coeffs[:, k][:, None]
    ok = np.max(np.abs(p), axis=1) <= RESIDUAL_TOL * scale
    return z, ok


def complex_roots_many(coeffs):
    """Roots of many monic polynomials of one degree, rows independent.

    coeffs is (P, n): row i holds the low coefficients of polynomial i.
    Exact trailing zeros are deflated per row (grouped so the batch solver
    sees equal degrees); stubborn rows fall back to companion eigenvalues.
    Each output row is sorted by (Re, Im).
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    rows, n = coeffs.shape
    out = np.zeros((rows, n), dtype=complex)
    if n == 0 or rows == 0:
        return out
    nonzero = coeffs != 0
    zeros = np.where(
        nonzero.any(axis=1), np.argmax(nonzero, axis=1), n
    )
    for z_count in np.unique(zeros):
        idx = np.where(zeros == z_count)[0]
        deg = n - z_count
        if deg == 0:
            continue  # rows that are exactly z^n: all roots stay 0
        sub = coeffs[idx, z_count:]
        if deg == 1:
            out[idx, z_count:] = -sub
            continue
        roots, ok = _aberth_batch(sub, ROOT_MAX_ITER)
        for local, row in enumerate(idx):
            if not ok[local]:
                cand = _companion_roots(sub[local])
                bound = RESIDUAL_TOL * (1.0 + np.max(np.abs(sub[local])))
                if np.max(np.abs(eval_monic(sub[local], cand))) > bound:
                    raise RootFindingError(coeffs[row])
                roots[local] = cand
        out[idx, z_count:] = roots
    out.sort(axis=1)  # numpy sorts complex lexicographically by (Re, Im)
    return out


def cluster_roots(roots, tol=ROOT_TOL):
    """Merge numerically coincident roots.

    Two roots belong to one cluster when |z - w| <= tol * (1 + scale) with
    scale the largest root magnitude (single linkage).  Returns a list of
    (representative, multiplicity) ordered by (Re, Im) of the representative;
    the representative is the cluster mean.
    """
    roots = np.asarray(roots, dtype=complex)
    if roots.size == 0:
        return []
    roots = _sorted_roots(roots)
    scale = 1.0 + float(np.max(np.abs(roots)))
    cut = tol * scale
    parent = list(range(len(roots)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) <= cut:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(len(roots)):
        groups.setdefault(find(i), []).append(i)
    clusters = []
    for members in groups.values():
        rep = complex(np.mean(roots[members]))
        clusters.append((rep, len(members)))
    clusters.sort(key=lambda c: (c[0].real, c[0].imag))
    return clusters


def distinct_roots_monic(coeffs, tol=ROOT_TOL):
    """Distinct roots of a monic polynomial with their multiplicities."""
    return cluster_roots(complex_roots_monic(coeffs), tol=tol)
