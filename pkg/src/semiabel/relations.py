"""Heuristic integer-relation detection by lattice reduction.

Rows of the search lattice are [e_i | round(S * Re(v_i)) | round(S * Im(v_i))]
with a scale S chosen from the tolerance; after LLL reduction, short
vectors whose embedded column is small yield candidate relations, which
are re-verified by direct summation and re-detected at a sharper
tolerance before being certified.
"""

from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-9
DEFAULT_MAX_HEIGHT = 1000
MAX_VALUES = 12
_LLL_DELTA = 0.99


@dataclass(frozen=True)
class RelationCertificate:
    coefficients: tuple
    residual: float
    height: int
    verified_at_higher_precision: bool


def _gram_schmidt(basis):
    """Float GSO of an integer basis: returns (orthogonal rows, mu)."""
    b = np.array(basis, dtype=float)
    n = len(basis)
    ortho = np.zeros_like(b)
    mu = np.zeros((n, n))
    for i in range(n):
        ortho[i] = b[i]
        for j in range(i):
            denom = ortho[j] @ ortho[j]
            mu[i, j] = 0.0 if denom == 0 else (b[i] @ ortho[j]) / denom
            ortho[i] = ortho[i] - mu[i, j] * ortho[j]
    return ortho, mu


def lll_reduce(basis, delta=_LLL_DELTA):
    """In-place LLL on a list of integer row vectors (exact arithmetic
    on the basis, floating-point Gram-Schmidt)."""
    basis = [list(map(int, row)) for row in basis]
    n = len(basis)
    if n <= 1:
        return basis
    ortho, mu = _gram_schmidt(basis)
    k = 1
    iters = 0
    max_iters = 10_000 * n * n
    while k < n and iters < max_iters:
        iters += 1
        for j in range(k - 1, -1, -1):
            q = round(mu[k, j])
            if q != 0:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[j])]
                ortho, mu = _gram_schmidt(basis)
        nk = ortho[k] @ ortho[k]
        nk1 = ortho[k - 1] @ ortho[k - 1]
        if nk >= (delta - mu[k, k - 1] ** 2) * nk1:
            k += 1
        else:
            basis[k], basis[k - 1] = basis[k - 1], basis[k]
            ortho, mu = _gram_schmidt(basis)
            k = max(k - 1, 1)
    return basis


def _search(values, max_height, tol):
    k = len(values)
    scale = 1000.0 / tol
    rows = []
    for i, v in enumerate(values):
        row = [0] * k + [round(v.real * scale), round(v.imag * scale)]
        row[i] = 1
        rows.append(row)
    reduced = lll_reduce(rows)
    best = None
    for row in reduced:
        coeffs = row[:k]
        if all(c == 0 for c in coeffs):
            continue
        height = max(abs(c) for c in coeffs)
        if height > max_height:
            continue
        resid = abs(sum(c * v for c, v in zip(coeffs, values)))
        if resid >= tol:
            continue
        if best is None or (height, resid) < best[1:]:
            best = (coeffs, height, resid)
    return best


def detect_integer_relation(values, max_height=DEFAULT_MAX_HEIGHT, tol=DEFAULT_TOL):
    """Integer relation sum(c_i v_i) ~ 0, or None.

    Any candidate is re-verified by direct summation; a second detection
    at tol/100 either confirms the same relation (certificate flag set)
    or the certificate ships unconfirmed.
    """
    values = [complex(v) for v in values]
    if len(values) > MAX_VALUES:
        raise ValueError(f"at most {MAX_VALUES} values supported")
    if any(not np.isfinite([v.real, v.imag]).all() for v in values):
        raise ValueError("values must be finite")
    if not values:
        return None
    found = _search(values, max_height, tol)
    if found is None:
        return None
    coeffs, height, resid = found
    refined = _search(values, max_height, tol / 100.0)
    confirmed = refined is not None and (
        list(refined[0]) == list(coeffs) or list(refined[0]) == [-c for c in coeffs]
    )
    return RelationCertificate(tuple(coeffs), resid, height, confirmed)
