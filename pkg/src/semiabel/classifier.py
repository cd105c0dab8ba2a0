"""Heuristic-numeric invariants of 1-motives over an elliptic curve.

Given an extension of the curve by tori (parametrized by points of the
dual) and marked points on the extension, this module detects torsion,
complex multiplication, endomorphism-linear dependence and deficiency,
and assembles the dimension invariants

    dim B, dim B_{v*}, dim B_Q, dim Z(1),
    dim UR(M) = 2 dim B + dim Z(1),
    dim Gal(M) = dim UR(M) + dim Gal(E),

together with the matched row of the eight-row classification table for
n = s = 1 and the conjectural transcendence-degree lower bounds.  All
dimension outputs from floating-point inputs are heuristic: every
detected linear relation ships as a re-verified certificate, and each
report carries a confidence flag.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .elliptic import CurveInvariants, quasi_periods
from .errors import InconsistentOverride, InternalInconsistency, NotApplicable
from .lattice import Lattice, real_coordinates
from .periods import EllipticPoint, check_on_curve, elliptic_log
from .relations import (
    DEFAULT_MAX_HEIGHT,
    DEFAULT_TOL,
    RelationCertificate,
    detect_integer_relation,
)
from .semiabelian import (
    ExtensionParam,
    SemiAbelianPoint,
    log_G,
    quasi_quasi_periods,
)

TWO_PI_I = 2j * math.pi

DEFAULT_N_MAX = 64

TABLE_ROWS = (
    "q-r-torsion",
    "p-q-torsion",
    "r-torsion",
    "q-torsion",
    "p-torsion",
    "dependent-deficient",
    "dependent-not-deficient",
    "independent",
)

# (dim UR, dim Gal for CM, dim Gal for non-CM); None marks the
# unreachable non-CM deficient cell.
_TABLE_DIMS = {
    "q-r-torsion": (0, 2, 4),
    "p-q-torsion": (1, 3, 5),
    "r-torsion": (2, 4, 6),
    "q-torsion": (3, 5, 7),
    "p-torsion": (3, 5, 7),
    "dependent-deficient": (2, 4, None),
    "dependent-not-deficient": (3, 5, 7),
    "independent": (5, 7, 9),
}


@dataclass(frozen=True)
class OneMotiveElliptic:
    """A 1-motive [u: Z^n -> G] with G an extension of the curve by
    Gm^s; carried by the curve, its lattice, the s extension parameters
    and the n marked points of G."""

    curve: CurveInvariants
    lattice: Lattice
    extension_params: tuple
    points: tuple
    cm_override: int = None

    def __post_init__(self):
        object.__setattr__(self, "extension_params", tuple(self.extension_params))
        object.__setattr__(self, "points", tuple(self.points))
        if len(self.points) < 1:
            raise ValueError("a 1-motive needs at least one marked point (n >= 1)")
        for R in self.points:
            check_on_curve(R.base, self.curve)

    @property
    def n(self):
        return len(self.points)

    @property
    def s(self):
        return len(self.extension_params)


@dataclass(frozen=True)
class ClassificationReport:
    dim_B: int
    dim_B_vstar: int
    dim_B_Q: int
    dim_Z1: int
    dim_UR: int
    dim_Gal: int
    table_row: str
    cm: bool
    cm_discriminant: int
    deficient: bool  # None when not applicable
    bounds: dict
    confidence: str
    relations: tuple = ()

    def __post_init__(self):
        if self.dim_UR != 2 * self.dim_B + self.dim_Z1:
            raise InternalInconsistency(
                f"dim UR {self.dim_UR} != 2*{self.dim_B} + {self.dim_Z1}"
            )
        if self.dim_Gal != self.dim_UR + (2 if self.cm else 4):
            raise InternalInconsistency(
                f"dim Gal {self.dim_Gal} != {self.dim_UR} + reductive part"
            )
        if self.dim_B != self.dim_B_vstar + self.dim_B_Q:
            raise InternalInconsistency(
                f"dim B {self.dim_B} != {self.dim_B_vstar} + {self.dim_B_Q}"
            )


# ---------------------------------------------------------------------------
# torsion
# ---------------------------------------------------------------------------


def _is_exact(x):
    return isinstance(x, (int, Fraction))


def _exact_neg(P):
    return EllipticPoint(P.x, -P.y)


def _exact_add(P1, P2, g2, g3):
    """Chord-tangent addition on y^2 = 4x^3 - g2 x - g3 over Q."""
    if P1.is_identity:
        return P2
    if P2.is_identity:
        return P1
    x1, y1, x2, y2 = (
        Fraction(P1.x),
        Fraction(P1.y),
        Fraction(P2.x),
        Fraction(P2.y),
    )
    if x1 == x2:
        if y1 == -y2:
            return EllipticPoint.identity()
        lam = Fraction(12 * x1 * x1 - g2, 2 * y1)
    else:
        lam = Fraction(y2 - y1, x2 - x1)
    x3 = lam * lam / 4 - x1 - x2
    y3 = -(lam * (x3 - x1) + y1)
    return EllipticPoint(x3, y3)


def _torsion_exact(P, g2, g3, n_max):
    """Smallest N <= n_max with N*P = O, by exact repeated addition."""
    g2, g3 = Fraction(g2), Fraction(g3)
    acc = P
    for N in range(1, n_max + 1):
        if acc.is_identity:
            return N
        acc = _exact_add(acc, P, g2, g3)
    return None


def is_torsion(P, L, n_max=DEFAULT_N_MAX, curve=None):
    """Smallest N <= n_max with N*P = O, or None.

    When the point and curve coordinates are exact rationals the order
    is settled by exact group-law addition; otherwise the elliptic
    logarithm is tested for coordinates in (1/N) * lattice.
    """
    if P.is_identity:
        return 1
    if (
        curve is not None
        and _is_exact(P.x)
        and _is_exact(P.y)
        and _is_exact(curve.g2)
        and _is_exact(curve.g3)
    ):
        return _torsion_exact(P, curve.g2, curve.g3, n_max)
    z = elliptic_log(P, L).value
    return _log_torsion_order(z, L, n_max)


def _log_torsion_order(z, L, n_max, tol=1e-8):
    """Smallest N <= n_max with N*z in Lambda, via real coordinates."""
    a1, a2 = real_coordinates(z, L)
    for N in range(1, n_max + 1):
        if abs(N * a1 - round(N * a1)) < tol and abs(N * a2 - round(N * a2)) < tol:
            return N
    return None


def _log_is_rational_period(z, L, max_height, tol):
    """True when z lies in Q*omega1 + Q*omega2 (torsion logarithm),
    decided by relation detection with heights up to max_height."""
    if abs(z) < tol:
        return True, None
    cert = detect_integer_relation([z, L.omega1, L.omega2], max_height, tol)
    if cert is not None and cert.coefficients[0] != 0:
        return True, cert
    return False, None


def _semiabelian_torsion_order(z, t, q, L, n_max, tol=1e-8):
    """Smallest N <= n_max with N*(z, t) in the rank-3 kernel lattice
    of exp_G, i.e. N*R = identity of G; None when no such N."""
    a1, a2 = real_coordinates(z, L)
    g1, g2 = quasi_quasi_periods(q, L)
    for N in range(1, n_max + 1):
        if abs(N * a1 - round(N * a1)) > tol or abs(N * a2 - round(N * a2)) > tol:
            continue
        m, n = round(N * a1), round(N * a2)
        k = (N * t + m * g1 + n * g2) / TWO_PI_I
        if abs(k - round(k.real)) < tol * (1.0 + abs(k)):
            return N
    return None


# ---------------------------------------------------------------------------
# complex multiplication
# ---------------------------------------------------------------------------


def detect_cm(L, max_height=DEFAULT_MAX_HEIGHT, tol=DEFAULT_TOL, cm_override=None):
    """CM discriminant of the lattice, or None.

    Searches an integer relation a*tau^2 + b*tau + c = 0 for the reduced
    period ratio tau and returns b^2 - 4ac when negative.  A declared
    override must agree with the detection.
    """
    w1, w2, _ = L.reduced_basis()
    tau = w2 / w1
    cert = detect_integer_relation([1.0, tau, tau * tau], max_height, tol)
    disc = None
    if cert is not None:
        c, b, a = cert.coefficients
        if a != 0:
            if a < 0:
                a, b, c = -a, -b, -c
            d = b * b - 4 * a * c
            if d < 0:
                disc = d
    if cm_override is not None:
        if disc != cm_override:
            raise InconsistentOverride(
                f"declared CM discriminant {cm_override}, detected {disc}"
            )
        return cm_override
    return disc


def _cm_multiplier(L, disc, max_height=DEFAULT_MAX_HEIGHT, tol=DEFAULT_TOL):
    """The purely imaginary quadratic integer delta = 2a*tau + b acting
    on the lattice (delta^2 = disc < 0); None for non-CM."""
    if disc is None:
        return None
    w1, w2, _ = L.reduced_basis()
    tau = w2 / w1
    cert = detect_integer_relation([1.0, tau, tau * tau], max_height, tol)
    if cert is None:
        raise InternalInconsistency("CM discriminant with no tau relation")
    c, b, a = cert.coefficients
    if a < 0:
        a, b, c = -a, -b, -c
    return 2 * a * tau + b


# ---------------------------------------------------------------------------
# span arithmetic over F = End (x) Q
# ---------------------------------------------------------------------------


def _in_rational_span(v, basis, max_height, tol):
    """(in_span, certificate) for v in Q-span(basis)."""
    if abs(v) < tol:
        return True, None
    cert = detect_integer_relation([v] + list(basis), max_height, tol)
    if cert is not None and cert.coefficients[0] != 0:
        return True, cert
    return False, None


def dim_B_elliptic(motive, max_height=DEFAULT_MAX_HEIGHT, tol=DEFAULT_TOL):
    """(dim_B, dim_B_vstar, dim_B_Q) over F = End (x) Q.

    Greedy F-span of the pulled-back extension-parameter logarithms
    (giving dim B_{v*}) followed by the point logarithms, modulo the
    F-span of the periods; in the CM case each independent value
    contributes the generator pair {v, delta*v}.
    """
    L = motive.lattice
    disc = detect_cm(L, max_height, tol, motive.cm_override)
    delta = _cm_multiplier(L, disc, max_height, tol)
    certs = []
    gens = [L.omega1, L.omega2]

    def add_if_independent(v):
        inside, cert = _in_rational_span(v, gens, max_height, tol)
        if cert is not None:
            certs.append(cert)
        if inside:
            return 0
        gens.append(v)
        if delta is not None:
            gens.append(delta * v)
        return 1

    d_vstar = 0
    for q in motive.extension_params:
        d_vstar += add_if_independent(q.primal(L))
    d_total = d_vstar
    for R in motive.points:
        z = elliptic_log(R.base, L, motive.curve).value
        d_total += add_if_independent(z)
    return d_total, d_vstar, d_total - d_vstar, tuple(certs)


def is_deficient(motive, max_height=DEFAULT_MAX_HEIGHT, tol=DEFAULT_TOL):
    """Whether the dependence q = beta * p holds with beta a purely
    imaginary element of the CM field (the antisymmetric-morphism case);
    None when not applicable (needs n = s = 1 and dim B = 1 with both
    P and Q non-torsion), False immediately for non-CM curves.
    """
    if motive.n != 1 or motive.s != 1:
        return None
    L = motive.lattice
    dim_b, _, _, _ = dim_B_elliptic(motive, max_height, tol)
    if dim_b != 1:
        return None
    mu = motive.extension_params[0].primal(L)
    p = elliptic_log(motive.points[0].base, L, motive.curve).value
    p_tor, _ = _log_is_rational_period(p, L, max_height, tol)
    q_tor, _ = _log_is_rational_period(mu, L, max_height, tol)
    if p_tor or q_tor:
        return None
    disc = detect_cm(L, max_height, tol, motive.cm_override)
    if disc is None:
        return False
    delta = _cm_multiplier(L, disc, max_height, tol)
    cert = detect_integer_relation(
        [mu, p, delta * p, L.omega1, L.omega2], max_height, tol
    )
    if cert is None or cert.coefficients[0] == 0:
        raise InternalInconsistency(
            "dim B = 1 but no dependence relation q = beta*p was found"
        )
    # q = beta*p mod periods with beta = -(c1 + c2*delta)/c0; beta is
    # purely imaginary exactly when the real component c1 vanishes
    return cert.coefficients[1] == 0


# ---------------------------------------------------------------------------
# dim Z(1)
# ---------------------------------------------------------------------------


def _third_kind_values(motive):
    """The n*s integrals of the third kind (fiber components of the
    generalized logarithms) together with the span basis they are
    reduced against: 2*pi*i and the quasi-quasi-periods."""
    L = motive.lattice
    basis = [TWO_PI_I]
    for q in motive.extension_params:
        g1, g2 = quasi_quasi_periods(q, L)
        basis.extend([g1, g2])
    values = []
    for R in motive.points:
        for q in motive.extension_params:
            _, tb = log_G(R, q, L, motive.curve)
            values.append(tb.value)
    return values, basis


def _zprime_nontrivial(motive, max_height, tol):
    """Whether the torus Z'(1) spanned by the Lie-bracket values on B is
    one-dimensional (n = s = 1 case).

    The bracket vanishes identically exactly when dim B = 0, or B is
    one-sided (P or Q torsion), or the dependence coefficient is purely
    imaginary (deficient case).
    """
    dim_b, _, _, _ = dim_B_elliptic(motive, max_height, tol)
    if dim_b == 0:
        return False
    if dim_b == 2:
        return True
    L = motive.lattice
    p = elliptic_log(motive.points[0].base, L, motive.curve).value
    mu = motive.extension_params[0].primal(L)
    p_tor, _ = _log_is_rational_period(p, L, max_height, tol)
    q_tor, _ = _log_is_rational_period(mu, L, max_height, tol)
    if p_tor or q_tor:
        return False
    return not is_deficient(motive, max_height, tol)


def dim_Z1(motive, max_height=DEFAULT_MAX_HEIGHT, tol=DEFAULT_TOL):
    """Dimension t of the Q-span of the third-kind integrals modulo
    2*pi*i*Q and the quasi-quasi-periods.

    For n = s = 1 the output is reconciled with the three-case torsor
    analysis: a nontrivial bracket torus Z'(1) forces the value 1
    regardless of the fiber representative.
    """
    if motive.s == 0:
        return 0
    values, basis = _third_kind_values(motive)
    t = 0
    for v in values:
        inside, _ = _in_rational_span(v, basis, max_height, tol)
        if not inside:
            basis.append(v)
            t += 1
    if motive.n == 1 and motive.s == 1 and _zprime_nontrivial(motive, max_height, tol):
        return 1
    return t


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def classify_table_row(motive, max_height=DEFAULT_MAX_HEIGHT, tol=DEFAULT_TOL,
                       n_max=DEFAULT_N_MAX):
    """Exactly one of the eight classification rows (n = s = 1 only),
    evaluated torsion conditions first, then dependence with deficiency,
    then independence."""
    if motive.n != 1 or motive.s != 1:
        raise NotApplicable("the classification table covers n = s = 1 only")
    L = motive.lattice
    R = motive.points[0]
    q = motive.extension_params[0]
    mu = q.primal(L)
    zb, tb = log_G(R, q, L, motive.curve)
    p_tor, _ = _log_is_rational_period(zb.value, L, max_height, tol)
    q_tor, _ = _log_is_rational_period(mu, L, max_height, tol)
    r_tor = (
        _semiabelian_torsion_order(zb.value, tb.value, q, L, n_max) is not None
        if p_tor
        else False
    )
    if q_tor and r_tor:
        return "q-r-torsion"
    if p_tor and q_tor:
        return "p-q-torsion"
    if r_tor:
        return "r-torsion"
    if q_tor:
        return "q-torsion"
    if p_tor:
        return "p-torsion"
    dim_b, _, _, _ = dim_B_elliptic(motive, max_height, tol)
    if dim_b == 1:
        if is_deficient(motive, max_height, tol) and dim_Z1(
            motive, max_height, tol
        ) == 0:
            return "dependent-deficient"
        return "dependent-not-deficient"
    return "independent"


def _bounds_from_dims(dim_b, dim_b_q, dim_z1, cm):
    gal_a = 2 if cm else 4
    return {
        "SA": 2 * dim_b + dim_z1 + gal_a,
        "WSA_V1": 2 * dim_b_q + dim_z1,
        "WSA_explicit": 2 * dim_b_q + dim_z1,
    }


def conjecture_bounds(motive, max_height=DEFAULT_MAX_HEIGHT, tol=DEFAULT_TOL):
    """The three conjectural transcendence-degree lower bounds computed
    from the dimension invariants (never asserted as true)."""
    dim_b, _, dim_b_q, _ = dim_B_elliptic(motive, max_height, tol)
    dim_z1 = dim_Z1(motive, max_height, tol)
    cm = detect_cm(motive.lattice, max_height, tol, motive.cm_override) is not None
    return _bounds_from_dims(dim_b, dim_b_q, dim_z1, cm)


def _torsion_certified(motive):
    """Whether every torsion determination could run on exact rational
    coordinates (exact group-law path)."""
    if not (_is_exact(motive.curve.g2) and _is_exact(motive.curve.g3)):
        return False
    for R in motive.points:
        if R.base.is_identity:
            continue
        if not (_is_exact(R.base.x) and _is_exact(R.base.y)):
            return False
    return True


def motivic_galois_dims(motive, max_height=DEFAULT_MAX_HEIGHT, tol=DEFAULT_TOL,
                        n_max=DEFAULT_N_MAX):
    """Full classification report; for n = s = 1 the dimension formulas
    are cross-checked against the matched table row and a mismatch
    raises InternalInconsistency."""
    L = motive.lattice
    disc = detect_cm(L, max_height, tol, motive.cm_override)
    cm = disc is not None
    dim_b, dim_b_vstar, dim_b_q, certs = dim_B_elliptic(motive, max_height, tol)
    dim_z1 = dim_Z1(motive, max_height, tol)
    dim_ur = 2 * dim_b + dim_z1
    dim_gal = dim_ur + (2 if cm else 4)
    deficient = is_deficient(motive, max_height, tol)
    if motive.n == 1 and motive.s == 1:
        row = classify_table_row(motive, max_height, tol, n_max)
        expected_ur, expected_cm, expected_noncm = _TABLE_DIMS[row]
        expected_gal = expected_cm if cm else expected_noncm
        if expected_gal is None:
            raise InternalInconsistency(
                "non-CM deficient cell is unreachable, yet it was classified"
            )
        if (dim_ur, dim_gal) != (expected_ur, expected_gal):
            raise InternalInconsistency(
                f"row {row!r} expects (UR, Gal) = "
                f"({expected_ur}, {expected_gal}), formulas give "
                f"({dim_ur}, {dim_gal})"
            )
    else:
        row = "general"
    return ClassificationReport(
        dim_B=dim_b,
        dim_B_vstar=dim_b_vstar,
        dim_B_Q=dim_b_q,
        dim_Z1=dim_z1,
        dim_UR=dim_ur,
        dim_Gal=dim_gal,
        table_row=row,
        cm=cm,
        cm_discriminant=disc,
        deficient=deficient,
        bounds=_bounds_from_dims(dim_b, dim_b_q, dim_z1, cm),
        confidence="certified-torsion" if _torsion_certified(motive) else "numeric",
        relations=certs,
    )
