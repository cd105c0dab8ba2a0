"""Hot numeric kernels: nome series for the odd Jacobi theta function and
Eisenstein weight-4/6 series, plus Carlson's symmetric integral RF.

Every kernel exists in two flavours: a pure-Python/numpy reference
implementation (the ``_py``-suffixed functions) and, when numba is
available and not disabled, an ``@njit``-compiled version.  Set
``SEMIABEL_DISABLE_NUMBA=1`` to force the fallback path; ``benchmarks/``
compares the two.

All kernels are scalar complex128 routines.  They return a status flag
instead of raising (numba-friendly); callers translate flags to
exceptions.
"""

import cmath
import os

MAX_TERMS = 10_000
_REL_EPS = 1e-16

_disabled = os.environ.get("SEMIABEL_DISABLE_NUMBA", "").lower() in ("1", "true", "yes")
try:
    if _disabled:
        raise ImportError
    from numba import njit as _njit

    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False
    _njit = None


def theta1_bundle_py(v, tau):
    """theta1 and its first three v-derivatives at argument v, lattice Z+Z*tau.

    theta1(v) = 2 * sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v),
    q = exp(i pi tau).  Derivatives are taken with respect to v.
    Returns (t0, t1, t2, t3, ok) with ok = 0 on convergence failure.
    """
    ipitau = 1j * cmath.pi * tau
    t0 = 0j
    t1 = 0j
    t2 = 0j
    t3 = 0j
    scale = 0.0
    for n in range(MAX_TERMS):
        m = 2 * n + 1
        coeff = 2.0 * cmath.exp(ipitau * (n + 0.5) ** 2)
        if n % 2 == 1:
            coeff = -coeff
        a = m * cmath.pi
        s = cmath.sin(a * v)
        c = cmath.cos(a * v)
        t0 += coeff * s
        t1 += coeff * a * c
        t2 -= coeff * a * a * s
        t3 -= coeff * a * a * a * c
        mag = abs(coeff) * (abs(s) + abs(c) + 1e-300) * a * a * a
        scale = max(scale, abs(t3) + 1e-300)
        if mag < _REL_EPS * scale and n >= 2:
            return t0, t1, t2, t3, 1
    return t0, t1, t2, t3, 0


def eisenstein_e4_e6_py(tau):
    """Normalized Eisenstein series E4, E6 at tau via Lambert series.

    E4 = 1 + 240 sum n^3 q^n / (1-q^n), E6 = 1 - 504 sum n^5 q^n / (1-q^n),
    q = exp(2 i pi tau).  Returns (e4, e6, ok).
    """
    q = cmath.exp(2j * cmath.pi * tau)
    if abs(q) >= 1.0 - 1e-6:
        return 0j, 0j, 0
    e4 = 0j
    e6 = 0j
    qn = 1.0 + 0j
    for n in range(1, MAX_TERMS):
        qn *= q
        term = qn / (1.0 - qn)
        n3 = float(n) ** 3
        e4 += n3 * term
        e6 += n3 * float(n) * float(n) * term
        if abs(term) * n3 * n * n < _REL_EPS * (1.0 + abs(e6)):
            return 1.0 + 240.0 * e4, 1.0 - 504.0 * e6, 1
    return 1.0 + 240.0 * e4, 1.0 - 504.0 * e6, 0


def carlson_rf_py(x, y, z):
    """Carlson's symmetric elliptic integral RF(x, y, z) for complex args.

    Duplication-theorem iteration; principal square roots throughout.
    Returns (value, ok).
    """
    A0 = (x + y + z) / 3.0
    Q = (3.0 * 2.220446049250313e-16) ** (-1.0 / 8.0) * max(
        abs(A0 - x), abs(A0 - y), abs(A0 - z)
    )
    xm, ym, zm = x, y, z
    Am = A0
    pow4 = 1.0
    ok = 0
    for _ in range(200):
        if Q * pow4 <= abs(Am):
            ok = 1
            break
        sx = cmath.sqrt(xm)
        sy = cmath.sqrt(ym)
        sz = cmath.sqrt(zm)
        lam = sx * sy + sx * sz + sy * sz
        xm = (xm + lam) / 4.0
        ym = (ym + lam) / 4.0
        zm = (zm + lam) / 4.0
        Am = (Am + lam) / 4.0
        pow4 /= 4.0
    if ok == 0 or Am == 0:
        return 0j, 0
    X = (A0 - x) * pow4 / Am
    Y = (A0 - y) * pow4 / Am
    Z = -X - Y
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    val = (
        1.0
        - E2 / 10.0
        + E3 / 14.0
        + E2 * E2 / 24.0
        - 3.0 * E2 * E3 / 44.0
    ) / cmath.sqrt(Am)
    return val, 1

if NUMBA_ENABLED:
    theta1_bundle = _njit(cache=True)(theta1_bundle_py)
    eisenstein_e4_e6 = _njit(cache=True)(eisenstein_e4_e6_py)
    carlson_rf = _njit(cache=True)(carlson_rf_py)
else:
    theta1_bundle = theta1_bundle_py
    eisenstein_e4_e6 = eisenstein_e4_e6_py
    carlson_rf = carlson_rf_py
