"""Series-based special functions and exact combinatorial helpers.

Provides the six target functions (li2, li3, chi2, chi3, ti2, ti3) on [0, 1],
double factorials, Wallis coefficients, harmonic numbers, a zeta oracle for
s in {2, 3, 4, 5}, and a table of the constants the rest of the package is
checked against.
"""

from __future__ import annotations

import math
import numbers
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._backend import kernels

__all__ = [
    "PrecisionWarning",
    "WallisCoefficient",
    "Constant",
    "ConstantsTable",
    "double_factorial",
    "wallis_coefficient",
    "wallis_value",
    "wallis_value_array",
    "harmonic",
    "odd_harmonic2",
    "li2",
    "li3",
    "chi2",
    "chi3",
    "ti2",
    "ti3",
    "zeta_oracle",
    "constants_table",
]

# Truncation policy shared by every series evaluator: stop once the analytic
# tail bound drops below TAIL_TOL, never sum more than SERIES_CAP terms, and
# warn when the argument sits in the open band (1 - NEAR_ONE_BAND, 1) where
# the geometric bound converges too slowly to trust blindly.
TAIL_TOL = 1e-14
SERIES_CAP = 10**6
NEAR_ONE_BAND = 1e-3

DOUBLE_FACTORIAL_MAX = 300


class PrecisionWarning(UserWarning):
    """Issued when an argument lies close enough to 1 that the truncation
    bound achieved by the capped series may exceed the usual tolerance."""


# ---------------------------------------------------------------------------
# exact combinatorics
# ---------------------------------------------------------------------------


def double_factorial(n: int) -> float:
    """n!! = n (n-2) (n-4) ... with (-1)!! = 0!! = 1, for -1 <= n <= 300.

    The product is accumulated in exact integer arithmetic and rounded once
    at the end; n = 300 is the largest index whose value fits in binary64.
    """
    n = _as_index(n, "double_factorial")
    if n < -1 or n > DOUBLE_FACTORIAL_MAX:
        raise ValueError(
            f"double_factorial: n must be in [-1, {DOUBLE_FACTORIAL_MAX}], got {n}"
        )
    acc = 1
    for k in range(n, 1, -2):
        acc *= k
    return float(acc)


@dataclass(frozen=True)
class WallisCoefficient:
    """w_n = (n-1)!!/n!!, the normalized sin^n integral over [0, pi/2]."""

    n: int
    value: float


# Cache of w_n as floats plus the exact integer pair ((n-1)!!, n!!) for the
# highest cached index.  The recurrence w_n = 1/(n w_{n-1}) becomes the pair
# step (num, den) -> (den, n num), which keeps both double factorials exact,
# so every cached float is the correctly rounded value of the true rational.
_WALLIS_CACHE: list[float] = [1.0, 1.0]
_WALLIS_PAIR: tuple[int, int] = (1, 1)


def _extend_wallis(limit: int) -> None:
    global _WALLIS_PAIR
    n = len(_WALLIS_CACHE) - 1
    if limit <= n:
        return
    num, den = _WALLIS_PAIR
    while n < limit:
        n += 1
        num, den = den, n * num
        _WALLIS_CACHE.append(num / den)
    _WALLIS_PAIR = (num, den)


def wallis_value(n: int) -> float:
    """Plain float value of w_n (cached iterative evaluation)."""
    n = _as_index(n, "wallis_value")
    if n < 0:
        raise ValueError(f"wallis_value: n must be nonnegative, got {n}")
    _extend_wallis(n)
    return _WALLIS_CACHE[n]


def wallis_value_array(order: int) -> np.ndarray:
    """Array [w_0, w_1, ..., w_order] as float64."""
    order = _as_index(order, "wallis_value_array")
    if order < 0:
        raise ValueError(f"wallis_value_array: order must be >= 0, got {order}")
    _extend_wallis(order)
    return np.array(_WALLIS_CACHE[: order + 1], dtype=np.float64)


def wallis_coefficient(n: int) -> WallisCoefficient:
    """The coefficient w_n = (n-1)!!/n!! as a tagged value."""
    n = _as_index(n, "wallis_coefficient")
    if n < 0:
        raise ValueError(f"wallis_coefficient: n must be nonnegative, got {n}")
    return WallisCoefficient(n=n, value=wallis_value(n))


def harmonic(n: int, m: int = 1) -> float:
    """Generalized harmonic number H_n^(m) by forward summation."""
    n = _as_index(n, "harmonic")
    m = _as_index(m, "harmonic")
    if n < 0:
        raise ValueError(f"harmonic: n must be nonnegative, got {n}")
    if m < 1:
        raise ValueError(f"harmonic: order m must be positive, got {m}")
    if n == 0:
        return 0.0
    return kernels.zeta_partial_sum(m, n)


def odd_harmonic2(n: int) -> float:
    """Second-order odd harmonic number: sum_{k=0}^{n-1} 1/(2k+1)^2."""
    n = _as_index(n, "odd_harmonic2")
    if n < 0:
        raise ValueError(f"odd_harmonic2: n must be nonnegative, got {n}")
    if n == 0:
        return 0.0
    return kernels.odd_zeta_partial_sum(2, n - 1)


def _as_index(n, name: str) -> int:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise ValueError(f"{name}: expected an integer, got {n!r}")
    return int(n)


# ---------------------------------------------------------------------------
# series evaluators
# ---------------------------------------------------------------------------


def _check_unit_interval(t: float, name: str) -> float:
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"{name}: argument must lie in [0, 1], got {t!r}")
    return t


def _warn_near_one(name: str, t: float, bound: float, terms: int) -> None:
    if 1.0 - NEAR_ONE_BAND < t < 1.0:
        warnings.warn(
            f"{name}({t!r}): argument within {NEAR_ONE_BAND:g} of 1; "
            f"series truncated after {terms} terms with tail bound {bound:.3e}",
            PrecisionWarning,
            stacklevel=3,
        )


def li2(t: float) -> float:
    """Dilogarithm sum_{n>=1} t^n/n^2 for t in [0, 1]."""
    return _polylog(t, 2, "li2")


def li3(t: float) -> float:
    """Trilogarithm sum_{n>=1} t^n/n^3 for t in [0, 1]."""
    return _polylog(t, 3, "li3")


def _polylog(t: float, s: int, name: str) -> float:
    t = _check_unit_interval(t, name)
    if t == 0.0:
        return 0.0
    if t == 1.0:
        table = constants_table()
        return table.zeta2.value if s == 2 else table.zeta3.value
    value, terms, bound = kernels.power_series_sum(t, s, TAIL_TOL, SERIES_CAP)
    _warn_near_one(name, t, bound, terms)
    return value


def chi2(t: float) -> float:
    """Odd-index series sum_{n>=0} t^(2n+1)/(2n+1)^2 for t in [0, 1]."""
    return _chi(t, 2, "chi2")


def chi3(t: float) -> float:
    """Odd-index series sum_{n>=0} t^(2n+1)/(2n+1)^3 for t in [0, 1]."""
    return _chi(t, 3, "chi3")


def _chi(t: float, s: int, name: str) -> float:
    t = _check_unit_interval(t, name)
    if t == 0.0:
        return 0.0
    if t == 1.0:
        table = constants_table()
        if s == 2:
            return 0.75 * table.zeta2.value
        return 0.875 * table.zeta3.value
    value, terms, bound = kernels.odd_series_sum(t, s, False, TAIL_TOL, SERIES_CAP)
    _warn_near_one(name, t, bound, terms)
    return value


def ti2(t: float) -> float:
    """Alternating odd series sum_{n>=0} (-1)^n t^(2n+1)/(2n+1)^2."""
    t = _check_unit_interval(t, "ti2")
    if t == 0.0:
        return 0.0
    if t == 1.0:
        return constants_table().catalan.value
    value, terms, bound = kernels.odd_series_sum(t, 2, True, TAIL_TOL, SERIES_CAP)
    _warn_near_one("ti2", t, bound, terms)
    return value


def ti3(t: float) -> float:
    """Alternating odd series sum_{n>=0} (-1)^n t^(2n+1)/(2n+1)^3."""
    t = _check_unit_interval(t, "ti3")
    if t == 0.0:
        return 0.0
    if t == 1.0:
        # The raw alternating tail decays like 1/N^3 at t = 1, so a direct
        # capped sum already clears 1e-14; no transform needed here.
        value, _, _ = kernels.odd_series_sum(1.0, 3, True, TAIL_TOL, 10**5)
        return value
    value, terms, bound = kernels.odd_series_sum(t, 3, True, TAIL_TOL, SERIES_CAP)
    _warn_near_one("ti3", t, bound, terms)
    return value


# ---------------------------------------------------------------------------
# constant oracles
# ---------------------------------------------------------------------------

_ZETA_EM_N = 10**5


def zeta_oracle(s: int) -> float:
    """zeta(s) for s in {2, 3, 4, 5}.

    Even s use the closed forms pi^2/6 and pi^4/90.  Odd s use a compensated
    partial sum to N = 1e5 plus the Euler-Maclaurin tail
    1/((s-1) N^(s-1)) - 1/(2 N^s) + s/(12 N^(s+1)), which leaves a remainder
    far below 1e-15.
    """
    s = _as_index(s, "zeta_oracle")
    if s == 2:
        return math.pi**2 / 6.0
    if s == 4:
        return math.pi**4 / 90.0
    if s in (3, 5):
        n = _ZETA_EM_N
        partial = kernels.zeta_partial_sum(s, n)
        tail = (
            1.0 / ((s - 1) * n ** (s - 1))
            - 1.0 / (2.0 * n**s)
            + s / (12.0 * n ** (s + 1))
        )
        return partial + tail
    raise ValueError(f"zeta_oracle: s must be one of 2, 3, 4, 5, got {s}")


def _catalan_euler(depth: int = 60) -> float:
    """Catalan constant via the Euler transform of sum (-1)^n/(2n+1)^2.

    Each transformed term is the k-th forward difference of 1/(2j+1)^2 at
    j = 0 divided by 2^(k+1); the terms are positive and halve roughly
    geometrically, so depth 60 exhausts binary64.
    """
    diffs = [1.0 / (2 * j + 1) ** 2 for j in range(depth)]
    total = 0.0
    comp = 0.0
    for k in range(depth):
        term = diffs[0] / 2.0 ** (k + 1)
        y = term - comp
        acc = total + y
        comp = (acc - total) - y
        total = acc
        diffs = [diffs[j] - diffs[j + 1] for j in range(len(diffs) - 1)]
    return total


@dataclass(frozen=True)
class Constant:
    """A numeric constant plus how it was obtained."""

    value: float
    provenance: str  # "closed-form" | "series-oracle"


@dataclass(frozen=True)
class ConstantsTable:
    """Reference constants used throughout the verification suite."""

    pi: Constant
    zeta2: Constant
    zeta3: Constant
    zeta4: Constant
    zeta5: Constant
    catalan: Constant
    ln2: Constant
    phi: Constant
    ln_phi: Constant

    def as_dict(self) -> dict[str, Constant]:
        return {
            "pi": self.pi,
            "zeta2": self.zeta2,
            "zeta3": self.zeta3,
            "zeta4": self.zeta4,
            "zeta5": self.zeta5,
            "catalan": self.catalan,
            "ln2": self.ln2,
            "phi": self.phi,
            "ln_phi": self.ln_phi,
        }


@lru_cache(maxsize=1)
def constants_table() -> ConstantsTable:
    """Build the constants table once; phi is computed at call time."""
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    return ConstantsTable(
        pi=Constant(math.pi, "closed-form"),
        zeta2=Constant(zeta_oracle(2), "closed-form"),
        zeta3=Constant(zeta_oracle(3), "series-oracle"),
        zeta4=Constant(zeta_oracle(4), "closed-form"),
        zeta5=Constant(zeta_oracle(5), "series-oracle"),
        catalan=Constant(_catalan_euler(), "series-oracle"),
        ln2=Constant(math.log(2.0), "closed-form"),
        phi=Constant(phi, "closed-form"),
        ln_phi=Constant(math.log(phi), "closed-form"),
    )
