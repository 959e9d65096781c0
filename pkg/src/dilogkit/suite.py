"""Registry of verifiable identities, inequalities, and accelerated sums.

Every case pairs two independent evaluation recipes (quadrature vs series,
closed form vs partial sum, coefficient algebra vs function values) with a
parameter grid and a tolerance, and the runner reports the worst deviation
per case.  Case ids are stable strings; ``paper_anchor`` carries the
external cross-reference label for each statement.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from ._backend import kernels
from .expansions import arcsin_series, arsinh_series, convolve
from .quadrature import (
    MENU,
    QuadratureConfig,
    arccos_kernel_transform,
    arctan_arccot_integral,
    arctan_squared_integral,
    cot_kernel_integral,
    default_config,
    lemma4_transform,
    wallis_coefficient_weights,
    wallis_transform,
)
from .series import (
    ConstantsTable,
    chi2,
    chi3,
    constants_table,
    li2,
    li3,
    odd_harmonic2,
    ti2,
    ti3,
    zeta_oracle,
)

__all__ = [
    "SUITE_VERSION",
    "IdentityCase",
    "VerificationReport",
    "EulerSumSpec",
    "SUM47_SPEC",
    "SUM48_SPEC",
    "DEDOELDER_SPEC",
    "euler_sum",
    "register_all",
    "run",
]

SUITE_VERSION = "1.0.0"

# Truncation order for the coefficientwise (series-only) identity path.  At
# t = 0.99 the neglected tail beyond index 1800 of the slowest series is
# below 2e-12, comfortably inside the 1e-11 budget.
COEFF_ORDER = 1800
EULER_N = 10**6

QUAD_TOL = 1e-9
SERIES_TOL = 1e-11
OBS_TOL = 1e-12
SUM_TOL = 1e-6
INEQ_SLACK = 1e-12

GRID21: tuple[float, ...] = tuple(i / 20 for i in range(20)) + (0.99,)
GRID200: tuple[float, ...] = tuple(float(x) for x in np.linspace(0.0, 0.99, 200))
GRID1000: tuple[float, ...] = tuple(k / 1000 for k in range(1, 1001))

Recipe = Callable[[float, QuadratureConfig], float]


@dataclass(frozen=True)
class IdentityCase:
    """One verifiable statement: two recipes, a grid, and a tolerance.

    kind "equality"/"sum": worst |lhs - rhs| over the grid must be at most
    ``tolerance``.  kind "inequality": lhs must not exceed rhs by more than
    ``tolerance`` anywhere (the signed excess is what gets reported).
    """

    id: str
    description: str
    paper_anchor: str
    kind: str  # "equality" | "inequality" | "sum"
    grid: tuple
    tolerance: float
    lhs: Recipe
    rhs: Recipe

    def __post_init__(self) -> None:
        if self.kind not in ("equality", "inequality", "sum"):
            raise ValueError(f"IdentityCase {self.id}: bad kind {self.kind!r}")
        if not self.tolerance > 0:
            raise ValueError(f"IdentityCase {self.id}: tolerance must be > 0")
        if len(self.grid) == 0:
            raise ValueError(f"IdentityCase {self.id}: grid must be nonempty")


@dataclass
class VerificationReport:
    """Outcome of running one case over its grid."""

    case_id: str
    worst_abs_error: float
    worst_point: float | None
    passed: bool
    evaluations: int
    wall_time_s: float
    note: str | None = None


# ---------------------------------------------------------------------------
# accelerated sums
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EulerSumSpec:
    """A slowly convergent sum: per-term recipe, analytic tail, target.

    ``kernel`` names a backend fast-path that accumulates the harmonic
    prefix incrementally (the generic ``term`` recipe recomputes it per
    term, which is fine for small n_terms but quadratic at 10^6).
    """

    term: Callable[[int], float]
    tail_correction: Callable[[int], float]
    n_terms: int
    target: Callable[[ConstantsTable], float]
    kernel: str | None = None


def euler_sum(spec: EulerSumSpec, n_terms: int | None = None) -> float:
    """Compensated partial sum to n_terms plus the analytic tail estimate."""
    n = spec.n_terms if n_terms is None else int(n_terms)
    if n < 10:
        raise ValueError(f"euler_sum: n_terms must be >= 10, got {n}")
    if spec.kernel is not None:
        partial = getattr(kernels, spec.kernel)(n)
    else:
        partial = 0.0
        comp = 0.0
        for i in range(1, n + 1):
            y = spec.term(i) - comp
            acc = partial + y
            comp = (acc - partial) - y
            partial = acc
    return partial + spec.tail_correction(n)


def _odd_harmonic1(n: int) -> float:
    """First-order odd harmonic: sum_{k=1}^{n} 1/(2k-1)."""
    return math.fsum(1.0 / (2 * k - 1) for k in range(1, n + 1))


SUM47_SPEC = EulerSumSpec(
    term=lambda n: odd_harmonic2(n) / (2 * n + 1) ** 2,
    tail_correction=lambda n: (math.pi**2 / 8.0) / (4.0 * n),
    n_terms=EULER_N,
    target=lambda tab: tab.pi.value**4 / 384.0,
    kernel="euler_sum_odd2_weighted",
)

SUM48_SPEC = EulerSumSpec(
    term=lambda n: (kernels.zeta_partial_sum(2, n - 1) if n > 1 else 0.0) / n**2,
    tail_correction=lambda n: zeta_oracle(2) / n - 1.5 / n**2,
    n_terms=EULER_N,
    target=lambda tab: tab.pi.value**4 / 120.0,
    kernel="euler_sum_h2_over_n2",
)

# Squared first-order odd harmonic over n^2.  The tail of sum (O_n)^2/n^2
# behaves like ((log n)/2 + log 2 + gamma/2)^2 / n^2; integrating gives the
# ((L+c)^2 + (L+c) + 1/2)/N estimate with L = (log N)/2, c = log 2 + gamma/2.
_DEDOELDER_C = math.log(2.0) + np.euler_gamma / 2.0

DEDOELDER_SPEC = EulerSumSpec(
    term=lambda n: _odd_harmonic1(n) ** 2 / n**2,
    tail_correction=lambda n: (
        (0.5 * math.log(n) + _DEDOELDER_C) ** 2
        + (0.5 * math.log(n) + _DEDOELDER_C)
        + 0.5
    )
    / n,
    n_terms=EULER_N,
    target=lambda tab: tab.pi.value**4 / 32.0,
    kernel="euler_sum_odd1sq_over_n2",
)


# ---------------------------------------------------------------------------
# lazy shared artifacts for the series-only paths
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _coeff_path_array(which: str) -> np.ndarray:
    """Weighted coefficient arrays realizing the transform coefficientwise."""
    weights = wallis_coefficient_weights(COEFF_ORDER)
    if which == "arcsin":
        base = arcsin_series(1, COEFF_ORDER).coefficients
    elif which == "arcsin2-over-pi":
        base = arcsin_series(2, COEFF_ORDER).coefficients / math.pi
    elif which == "arcsin-combo":
        base = (
            arcsin_series(1, COEFF_ORDER).coefficients
            + arcsin_series(2, COEFF_ORDER).coefficients / math.pi
        )
    elif which == "arsinh":
        base = arsinh_series(1, COEFF_ORDER).coefficients
    elif which == "half-arsinh2":
        base = 0.5 * arsinh_series(2, COEFF_ORDER).coefficients
    else:
        raise ValueError(f"unknown coefficient path {which!r}")
    arr = np.ascontiguousarray(weights * base)
    arr.setflags(write=False)
    return arr


def _coeff_path_value(which: str, t: float) -> float:
    return kernels.horner_eval(_coeff_path_array(which), t)


LEM5_ORDER = 60


@lru_cache(maxsize=None)
def _lem5_pair(power: int) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form vs convolution-oracle coefficients for a cube/quartic."""
    if power == 3:
        closed = arcsin_series(3, LEM5_ORDER).coefficients
        oracle = convolve(arcsin_series(1, LEM5_ORDER), arcsin_series(2, LEM5_ORDER)).coefficients
    else:
        closed = arcsin_series(4, LEM5_ORDER).coefficients
        oracle = convolve(arcsin_series(2, LEM5_ORDER), arcsin_series(2, LEM5_ORDER)).coefficients
    return closed, oracle


def _lem5_rel_error(power: int, index: float) -> float:
    closed, oracle = _lem5_pair(power)
    i = int(index)
    a, b = closed[i], oracle[i]
    if a == 0.0 and b == 0.0:
        return 0.0
    return abs(a - b) / max(abs(a), abs(b))


@lru_cache(maxsize=1)
def _eta3_alternating() -> float:
    """sum (-1)^(n-1)/n^3 summed directly; alternating tail < 1e-15."""
    total = 0.0
    comp = 0.0
    sign = 1.0
    n = 0
    while True:
        n += 1
        term = sign / n**3
        if abs(term) < 1e-15 or n > 10**5:
            break
        y = term - comp
        acc = total + y
        comp = (acc - total) - y
        total = acc
        sign = -sign
    return total


def _odd_tail_s2(n: int) -> float:
    """Tail of sum 1/(2k+1)^2 beyond k = n (three asymptotic terms)."""
    a = 2.0 * n + 3.0
    return 1.0 / (2.0 * a) + 1.0 / (2.0 * a * a) + 1.0 / (3.0 * a**3)


def _odd_tail_s3(n: int) -> float:
    """Tail of sum 1/(2k+1)^3 beyond k = n (three asymptotic terms)."""
    a = 2.0 * n + 3.0
    return 1.0 / (4.0 * a * a) + 1.0 / (2.0 * a**3) + 1.0 / a**4


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------


def _case(
    cid: str,
    description: str,
    anchor: str,
    kind: str,
    grid: tuple,
    tol: float,
    lhs: Recipe,
    rhs: Recipe,
) -> IdentityCase:
    return IdentityCase(cid, description, anchor, kind, grid, tol, lhs, rhs)


def register_all() -> dict[str, IdentityCase]:
    """Build the full case registry (deterministic insertion order)."""
    tab = constants_table()
    pi = tab.pi.value
    z3 = tab.zeta3.value
    z4 = tab.zeta4.value
    z5 = tab.zeta5.value
    ln2 = tab.ln2.value
    catalan = tab.catalan.value
    phi = tab.phi.value
    ln_phi = tab.ln_phi.value

    cases: list[IdentityCase] = []

    # -- parametric transform identities, quadrature vs series -------------
    w = wallis_transform
    k = arccos_kernel_transform
    cases += [
        _case(
            "thm1.eq8",
            "Chebyshev-weight transform of arcsin equals chi2",
            "Theorem 1, Eq. (8)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: w(MENU["arcsin"], t, cfg).value,
            lambda t, cfg: chi2(t),
        ),
        _case(
            "thm1.eq9",
            "Chebyshev-weight transform of arcsin^2/pi equals Li2(t^2)/4",
            "Theorem 1, Eq. (9)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: w(MENU["arcsin2-over-pi"], t, cfg).value,
            lambda t, cfg: 0.25 * li2(t * t),
        ),
        _case(
            "thm1.eq10",
            "Chebyshev-weight transform of arcsin + arcsin^2/pi equals li2",
            "Theorem 1, Eq. (10)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: w(MENU["arcsin-combo"], t, cfg).value,
            lambda t, cfg: li2(t),
        ),
        _case(
            "thm1.eq11",
            "Chebyshev-weight transform of arsinh equals ti2",
            "Theorem 1, Eq. (11)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: w(MENU["arsinh"], t, cfg).value,
            lambda t, cfg: ti2(t),
        ),
        _case(
            "thm1.eq12",
            "Chebyshev-weight transform of arsinh^2/2 equals the even-part combination of li2",
            "Theorem 1, Eq. (12)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: w(MENU["half-arsinh2"], t, cfg).value,
            lambda t, cfg: (pi / 2.0) * (0.25 * li2(t * t) - 0.125 * li2(t**4)),
        ),
    ]

    # -- the same five statements through coefficient algebra --------------
    coeff_paths = [
        ("thm1.coeff13", "arcsin", "Theorem 1 proof, Eq. (13)", lambda t, cfg: chi2(t)),
        (
            "thm1.coeff14",
            "arcsin2-over-pi",
            "Theorem 1 proof, Eq. (14)",
            lambda t, cfg: 0.25 * li2(t * t),
        ),
        ("thm1.coeff15", "arcsin-combo", "Theorem 1 proof, Eq. (15)", lambda t, cfg: li2(t)),
        ("thm1.coeff16", "arsinh", "Theorem 1 proof, Eq. (16)", lambda t, cfg: ti2(t)),
        (
            "thm1.coeff17",
            "half-arsinh2",
            "Theorem 1 proof, Eq. (17)",
            lambda t, cfg: (pi / 2.0) * (0.25 * li2(t * t) - 0.125 * li2(t**4)),
        ),
    ]
    for cid, which, anchor, rhs in coeff_paths:
        cases.append(
            _case(
                cid,
                f"coefficientwise transform of {which} matches the series target",
                anchor,
                "equality",
                GRID21,
                SERIES_TOL,
                (lambda which: lambda t, cfg: _coeff_path_value(which, t))(which),
                rhs,
            )
        )

    # -- order-3 analogs via the arccos kernel ------------------------------
    cases += [
        _case(
            "thm2.eq33",
            "arccos-kernel transform of arcsin equals chi3",
            "Theorem 2, Eq. (33)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: k(MENU["arcsin"], t, cfg).value,
            lambda t, cfg: chi3(t),
        ),
        _case(
            "thm2.eq34",
            "scaled arccos-kernel transform of arcsin^2/2 equals Li3(t^2)/8",
            "Theorem 2, Eq. (34)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: (2.0 / pi) * k(MENU["half-arcsin2"], t, cfg).value,
            lambda t, cfg: 0.125 * li3(t * t),
        ),
        _case(
            "thm2.eq35",
            "arccos-kernel transform of arcsin + arcsin^2/pi equals li3",
            "Theorem 2, Eq. (35)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: k(MENU["arcsin-combo"], t, cfg).value,
            lambda t, cfg: li3(t),
        ),
        _case(
            "thm2.eq36",
            "arccos-kernel transform of arsinh equals ti3",
            "Theorem 2, Eq. (36)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: k(MENU["arsinh"], t, cfg).value,
            lambda t, cfg: ti3(t),
        ),
        _case(
            "thm2.eq37",
            "arccos-kernel transform of arsinh^2/2 equals the even-part combination of li3",
            "Theorem 2, Eq. (37)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: k(MENU["half-arsinh2"], t, cfg).value,
            lambda t, cfg: (pi / 2.0) * (0.125 * li3(t * t) - li3(t**4) / 32.0),
        ),
    ]

    # -- endpoint constants --------------------------------------------------
    cor1 = [
        (
            "cor1.18",
            "weight-transform of arcsin at 1 equals pi^2/8",
            "Corollary 1, first display",
            lambda t, cfg: w(MENU["arcsin"], 1.0, cfg).value,
            pi**2 / 8.0,
        ),
        (
            "cor1.19",
            "(2/pi) x weight-transform of arcsin^2/2 at 1 equals pi^2/24",
            "Corollary 1, second display",
            lambda t, cfg: (2.0 / pi) * w(MENU["half-arcsin2"], 1.0, cfg).value,
            pi**2 / 24.0,
        ),
        (
            "cor1.20",
            "weight-transform of the combined integrand at 1 equals pi^2/6",
            "Corollary 1, third display",
            lambda t, cfg: w(MENU["arcsin-combo"], 1.0, cfg).value,
            pi**2 / 6.0,
        ),
        (
            "cor1.21",
            "weight-transform of arsinh at 1 equals the alternating-series constant",
            "Corollary 1, fourth display",
            lambda t, cfg: w(MENU["arsinh"], 1.0, cfg).value,
            catalan,
        ),
        (
            "cor1.22",
            "weight-transform of arsinh^2/2 at 1 equals pi^3/96",
            "Corollary 1, fifth display",
            lambda t, cfg: w(MENU["half-arsinh2"], 1.0, cfg).value,
            pi**3 / 96.0,
        ),
    ]
    cor2 = [
        (
            "cor2.38",
            "arccos-kernel transform of arcsin at 1 equals (7/8) zeta(3)",
            "Corollary 2, Eq. (38)",
            lambda t, cfg: k(MENU["arcsin"], 1.0, cfg).value,
            0.875 * z3,
        ),
        (
            "cor2.39",
            "(2/pi) x arccos-kernel transform of arcsin^2/2 at 1 equals zeta(3)/8",
            "Corollary 2, Eq. (39)",
            lambda t, cfg: (2.0 / pi) * k(MENU["half-arcsin2"], 1.0, cfg).value,
            z3 / 8.0,
        ),
        (
            "cor2.40",
            "arccos-kernel transform of the combined integrand at 1 equals zeta(3)",
            "Corollary 2, Eq. (40)",
            lambda t, cfg: k(MENU["arcsin-combo"], 1.0, cfg).value,
            z3,
        ),
        (
            "cor2.41",
            "arccos-kernel transform of arsinh at 1 equals pi^3/32",
            "Corollary 2, Eq. (41)",
            lambda t, cfg: k(MENU["arsinh"], 1.0, cfg).value,
            pi**3 / 32.0,
        ),
        (
            "cor2.42",
            "arccos-kernel transform of arsinh^2/2 at 1 equals (3 pi/64) zeta(3)",
            "Corollary 2, Eq. (42)",
            lambda t, cfg: k(MENU["half-arsinh2"], 1.0, cfg).value,
            (3.0 * pi / 64.0) * z3,
        ),
    ]
    for cid, desc, anchor, lhs, target in cor1 + cor2:
        cases.append(
            _case(
                cid,
                desc,
                anchor,
                "equality",
                (1.0,),
                QUAD_TOL,
                lhs,
                (lambda target: lambda t, cfg: target)(target),
            )
        )

    # -- series decompositions ----------------------------------------------
    cases += [
        _case(
            "obs1",
            "li2 splits into chi2 plus a quarter of li2 at the squared argument",
            "Observation 1",
            "equality",
            GRID200,
            OBS_TOL,
            lambda t, cfg: li2(t),
            lambda t, cfg: chi2(t) + 0.25 * li2(t * t),
        ),
        _case(
            "obs2",
            "li3 splits into chi3 plus an eighth of li3 at the squared argument",
            "Observation 2",
            "equality",
            GRID200,
            OBS_TOL,
            lambda t, cfg: li3(t),
            lambda t, cfg: chi3(t) + 0.125 * li3(t * t),
        ),
        _case(
            "lem4",
            "single-integral kernel representation reproduces li2",
            "Lemma 4, Eq. (46)",
            "equality",
            GRID21,
            QUAD_TOL,
            lambda t, cfg: lemma4_transform(t, cfg).value,
            lambda t, cfg: li2(t),
        ),
    ]

    # -- lower/upper bounds ---------------------------------------------------
    cases += [
        _case(
            "thm3.ineq43",
            "cubic arcsin bound stays below li2 on (0, 1]",
            "Theorem 3, Eq. (43)",
            "inequality",
            GRID1000,
            INEQ_SLACK,
            lambda t, cfg: (4.0 / (3.0 * pi)) * math.asin(t) ** 3 / t,
            lambda t, cfg: li2(t),
        ),
        _case(
            "thm3.ineq44",
            "squared arcsin bound stays below chi2 on (0, 1]",
            "Theorem 3, Eq. (44)",
            "inequality",
            GRID1000,
            INEQ_SLACK,
            lambda t, cfg: math.asin(t) ** 2 / (2.0 * t),
            lambda t, cfg: chi2(t),
        ),
        _case(
            "thm3.ineq45",
            "squared arsinh bound stays below ti2 on (0, 1]",
            "Theorem 3, Eq. (45)",
            "inequality",
            GRID1000,
            INEQ_SLACK,
            lambda t, cfg: math.asinh(t) ** 2 / (2.0 * t),
            lambda t, cfg: ti2(t),
        ),
        _case(
            "thm3.upper.li2",
            "li2 stays below its linear majorant (pi^2/6) t",
            "Section 4.1, first upper bound",
            "inequality",
            GRID1000,
            INEQ_SLACK,
            lambda t, cfg: li2(t),
            lambda t, cfg: (pi**2 / 6.0) * t,
        ),
        _case(
            "thm3.upper.chi2",
            "chi2 stays below its linear majorant (pi^2/8) t",
            "Section 4.1, second upper bound",
            "inequality",
            GRID1000,
            INEQ_SLACK,
            lambda t, cfg: chi2(t),
            lambda t, cfg: (pi**2 / 8.0) * t,
        ),
    ]

    # -- accelerated sums -------------------------------------------------------
    cases += [
        _case(
            "thm4.sum47",
            "odd-harmonic weighted sum accelerates to pi^4/384",
            "Theorem 4, Eq. (47)",
            "sum",
            (float(EULER_N),),
            SUM_TOL,
            lambda n, cfg: euler_sum(SUM47_SPEC, int(n)),
            lambda n, cfg: SUM47_SPEC.target(tab),
        ),
        _case(
            "thm4.sum48",
            "shifted second-order harmonic sum accelerates to pi^4/120",
            "Theorem 4, Eq. (48)",
            "sum",
            (float(EULER_N),),
            SUM_TOL,
            lambda n, cfg: euler_sum(SUM48_SPEC, int(n)),
            lambda n, cfg: SUM48_SPEC.target(tab),
        ),
        _case(
            "remark.dedoelder",
            "squared odd-harmonic sum accelerates to pi^4/32",
            "Remark after Theorem 4, first sum",
            "sum",
            (float(EULER_N),),
            SUM_TOL,
            lambda n, cfg: euler_sum(DEDOELDER_SPEC, int(n)),
            lambda n, cfg: DEDOELDER_SPEC.target(tab),
        ),
        _case(
            "remark.h2sum",
            "second-order harmonic sum equals (7/4) zeta(4) via the shifted sum",
            "Remark after Theorem 4, second sum",
            "sum",
            (float(EULER_N),),
            SUM_TOL,
            lambda n, cfg: euler_sum(SUM48_SPEC, int(n)) + z4,
            lambda n, cfg: 1.75 * z4,
        ),
    ]

    # -- coefficient oracle equivalences ----------------------------------------
    cases += [
        _case(
            "lem5.coeff3",
            "closed-form cubic coefficients match the convolution oracle (relative)",
            "Lemma 5, Eq. (49)",
            "equality",
            tuple(float(i) for i in range(3, LEM5_ORDER + 1)),
            1e-10,
            lambda i, cfg: _lem5_rel_error(3, i),
            lambda i, cfg: 0.0,
        ),
        _case(
            "lem5.coeff4",
            "closed-form quartic coefficients match the convolution oracle (relative)",
            "Lemma 5, Eq. (50)",
            "equality",
            tuple(float(i) for i in range(4, LEM5_ORDER + 1)),
            1e-10,
            lambda i, cfg: _lem5_rel_error(4, i),
            lambda i, cfg: 0.0,
        ),
    ]

    # -- classical odd-series rows re-anchored through the chi endpoints ---------
    cases += [
        _case(
            "fig1.boo",
            "tail-corrected odd-square sum equals chi2(1)",
            "Table 1, row 1",
            "sum",
            (float(EULER_N),),
            SUM_TOL,
            lambda n, cfg: kernels.odd_zeta_partial_sum(2, int(n)) + _odd_tail_s2(int(n)),
            lambda n, cfg: chi2(1.0),
        ),
        _case(
            "fig1.ewell",
            "tail-corrected odd-cube sum equals chi3(1)",
            "Table 1, row 2",
            "sum",
            (1e5,),
            SUM_TOL,
            lambda n, cfg: kernels.odd_zeta_partial_sum(3, int(n)) + _odd_tail_s3(int(n)),
            lambda n, cfg: chi3(1.0),
        ),
        _case(
            "fig1.wy",
            "alternating-series route to (pi/8) zeta(3) equals (pi/7) chi3(1)",
            "Table 1, row 3",
            "sum",
            (1e5,),
            SUM_TOL,
            lambda n, cfg: (pi / 8.0) * (4.0 / 3.0) * _eta3_alternating(),
            lambda n, cfg: (pi / 7.0) * chi3(1.0),
        ),
    ]

    # -- golden-section and half-log special values -------------------------------
    inv_phi = 1.0 / phi
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    inv_sqrt_phi = phi**-0.5
    cases += [
        _case(
            "golden.eq56",
            "weight-transform of arcsin at the inverse golden ratio hits its closed form",
            "Section 4.3, Eq. (56)",
            "equality",
            (inv_phi,),
            QUAD_TOL,
            lambda t, cfg: w(MENU["arcsin"], t, cfg).value,
            lambda t, cfg: -0.75 * ln_phi**2 + pi**2 / 12.0,
        ),
        _case(
            "golden.eq57",
            "weight-transform of arcsin^2/2 at 1/sqrt(2) hits (pi/8) x its dilog value",
            "Section 4.3, Eq. (57)",
            "equality",
            (inv_sqrt2,),
            QUAD_TOL,
            lambda t, cfg: w(MENU["half-arcsin2"], t, cfg).value,
            lambda t, cfg: (pi / 8.0) * (pi**2 / 12.0 - 0.5 * ln2**2),
        ),
        _case(
            "golden.eq58",
            "scaled arccos-kernel transform at the inverse golden ratio hits the cubic-log form",
            "Section 4.3, Eq. (58)",
            "equality",
            (inv_phi,),
            QUAD_TOL,
            lambda t, cfg: (16.0 / pi) * k(MENU["half-arcsin2"], t, cfg).value,
            lambda t, cfg: 0.8 * z3 - (2.0 * pi**2 / 15.0) * ln_phi + (2.0 / 3.0) * ln_phi**3,
        ),
        _case(
            "golden.eq59",
            "weight-transform of arsinh^2/2 at 1/sqrt(phi) hits its closed form",
            "Section 4.3, Eq. (59)",
            "equality",
            (inv_sqrt_phi,),
            QUAD_TOL,
            lambda t, cfg: w(MENU["half-arsinh2"], t, cfg).value,
            lambda t, cfg: (pi / 2.0) * (-0.125 * ln_phi**2 + pi**2 / 60.0),
        ),
        _case(
            "golden.eq60",
            "scaled arccos-kernel transform at 1/sqrt(2) hits the trilog half-value",
            "Section 4.3, Eq. (60)",
            "equality",
            (inv_sqrt2,),
            QUAD_TOL,
            lambda t, cfg: (16.0 / pi) * k(MENU["half-arcsin2"], t, cfg).value,
            lambda t, cfg: 0.875 * z3 - (pi**2 / 12.0) * ln2 + ln2**3 / 6.0,
        ),
        _case(
            "golden.fact51",
            "chi2 at the inverse golden ratio matches the log-squared closed form",
            "Section 4.3, Eqs. (51)-(53) combined",
            "equality",
            (inv_phi,),
            SERIES_TOL,
            lambda t, cfg: chi2(t),
            lambda t, cfg: -0.75 * ln_phi**2 + pi**2 / 12.0,
        ),
    ]

    # -- concluding integrals --------------------------------------------------
    cases += [
        _case(
            "concl.asin3",
            "cubic cot-kernel integral matches its log/zeta closed form",
            "Section 5, item 4 (k = 3)",
            "equality",
            (1.0,),
            QUAD_TOL,
            lambda t, cfg: cot_kernel_integral(3, cfg).value,
            lambda t, cfg: (pi**3 / 8.0) * ln2 - (9.0 / 16.0) * pi * z3,
        ),
        _case(
            "concl.asin4",
            "quartic cot-kernel integral matches its log/zeta closed form",
            "Section 5, item 4 (k = 4)",
            "equality",
            (1.0,),
            QUAD_TOL,
            lambda t, cfg: cot_kernel_integral(4, cfg).value,
            lambda t, cfg: (-18.0 * pi**2 * z3 + 93.0 * z5 + 2.0 * pi**4 * ln2) / 32.0,
        ),
        _case(
            "concl.atan",
            "arctan x arccot integral equals (7/8) zeta(3)",
            "Section 5, item 5",
            "equality",
            (1.0,),
            QUAD_TOL,
            lambda t, cfg: arctan_arccot_integral(cfg).value,
            lambda t, cfg: 0.875 * z3,
        ),
        _case(
            "concl.atan.decomp",
            "arctan x arccot integral decomposes through the squared-arctan integral",
            "Section 5, item 5 decomposition",
            "equality",
            (1.0,),
            QUAD_TOL,
            lambda t, cfg: arctan_arccot_integral(cfg).value,
            lambda t, cfg: (pi / 2.0) * catalan - arctan_squared_integral(cfg).value,
        ),
    ]

    registry: dict[str, IdentityCase] = {}
    for case in cases:
        if case.id in registry:
            raise ValueError(f"duplicate case id {case.id!r}")
        registry[case.id] = case
    return registry


# ---------------------------------------------------------------------------
# the runner
# ---------------------------------------------------------------------------


def run(
    ids: list[str] | None = None,
    config: QuadratureConfig | None = None,
    registry: dict[str, IdentityCase] | None = None,
) -> list[VerificationReport]:
    """Evaluate cases over their grids and report worst deviations.

    Unknown ids raise KeyError.  A non-finite evaluation marks that case
    failed with a diagnostic note and the run continues with the next case.
    """
    reg = registry if registry is not None else register_all()
    if ids is None:
        selected = list(reg.values())
    else:
        missing = [i for i in ids if i not in reg]
        if missing:
            raise KeyError(f"unknown case id(s): {', '.join(map(repr, missing))}")
        selected = [reg[i] for i in ids]
    cfg = config if config is not None else default_config()

    reports: list[VerificationReport] = []
    for case in selected:
        start = time.perf_counter()
        worst = -math.inf
        worst_point: float | None = None
        evaluations = 0
        note: str | None = None
        failed_non_finite = False
        for raw_point in case.grid:
            point = float(raw_point)
            lhs = float(case.lhs(point, cfg))
            rhs = float(case.rhs(point, cfg))
            evaluations += 2
            if not (math.isfinite(lhs) and math.isfinite(rhs)):
                note = f"non-finite evaluation at point {point!r}: lhs={lhs!r}, rhs={rhs!r}"
                worst = math.inf
                worst_point = point
                failed_non_finite = True
                break
            err = lhs - rhs if case.kind == "inequality" else abs(lhs - rhs)
            if err > worst:
                worst = err
                worst_point = point
        passed = (not failed_non_finite) and worst <= case.tolerance
        reports.append(
            VerificationReport(
                case_id=case.id,
                worst_abs_error=worst,
                worst_point=worst_point,
                passed=passed,
                evaluations=evaluations,
                wall_time_s=time.perf_counter() - start,
                note=note,
            )
        )
    return reports
