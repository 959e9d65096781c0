"""Truncated Maclaurin expansions of powers of arcsin/arsinh.

Coefficient arrays store the plain t^i coefficient with every prefactor
folded in (index i = coefficient of t^i).  A Cauchy-product convolution
serves as an independent oracle for the cubic and quartic closed forms,
and ``integrate_over_y`` realizes the termwise map f(y) -> integral of
f(y)/y from 0 to t, which divides each coefficient by its own index.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .series import harmonic, odd_harmonic2, wallis_value_array

__all__ = [
    "SeriesSource",
    "SeriesExpansion",
    "arcsin_series",
    "arsinh_series",
    "integrate_over_y",
    "evaluate_series",
    "convolve",
]

DEFAULT_ORDER = 400


class SeriesSource(enum.Enum):
    """Which construction produced a SeriesExpansion."""

    ARCSIN_POW1 = "arcsin-pow1"
    ARCSIN_POW2 = "arcsin-pow2"
    ARCSIN_POW3 = "arcsin-pow3"
    ARCSIN_POW4 = "arcsin-pow4"
    ARSINH = "arsinh"
    ARSINH_SQ = "arsinh-sq"
    CONVOLUTION_ORACLE = "convolution-oracle"
    INTEGRATED_KERNEL = "integrated-kernel"


@dataclass(frozen=True, eq=False)
class SeriesExpansion:
    """Truncated power series: ``coefficients[i]`` multiplies t^i."""

    coefficients: np.ndarray
    source: SeriesSource

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.coefficients, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("SeriesExpansion: coefficients must be a nonempty 1-d array")
        if not np.all(np.isfinite(arr)):
            raise ValueError("SeriesExpansion: coefficients must all be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coefficients", arr)

    @property
    def order(self) -> int:
        """Largest stored power of t."""
        return self.coefficients.size - 1


_ARCSIN_SOURCES = {
    1: SeriesSource.ARCSIN_POW1,
    2: SeriesSource.ARCSIN_POW2,
    3: SeriesSource.ARCSIN_POW3,
    4: SeriesSource.ARCSIN_POW4,
}


def arcsin_series(power: int, order: int = DEFAULT_ORDER) -> SeriesExpansion:
    """Maclaurin expansion of (arcsin t)^power for power in {1, 2, 3, 4}.

    Coefficient formulas (w = Wallis coefficients, O = second-order odd
    harmonics, H = second-order harmonics):

    - power 1: t^(2n+1) carries w_{2n}/(2n+1)
    - power 2: t^(2n)   carries (1/2)/(w_{2n} n^2)
    - power 3: t^(2n+1) carries 6 O_n w_{2n}/(2n+1)
    - power 4: t^(2n)   carries (3/2) H_{n-1}/(w_{2n} n^2)
    """
    if power not in _ARCSIN_SOURCES:
        raise ValueError(f"arcsin_series: power must be in {{1, 2, 3, 4}}, got {power!r}")
    order = _check_order(order, power, "arcsin_series")
    coeffs = _power_coefficients(power, order, alternating=False)
    return SeriesExpansion(coeffs, _ARCSIN_SOURCES[power])


def arsinh_series(power: int, order: int = DEFAULT_ORDER) -> SeriesExpansion:
    """Maclaurin expansion of (arsinh t)^power for power in {1, 2}.

    Same coefficient magnitudes as the arcsin counterparts with signs
    alternating in n: (-1)^n on t^(2n+1) for power 1 and (-1)^(n-1) on
    t^(2n) for power 2.
    """
    if power not in (1, 2):
        raise ValueError(f"arsinh_series: power must be 1 or 2, got {power!r}")
    order = _check_order(order, power, "arsinh_series")
    coeffs = _power_coefficients(power, order, alternating=True)
    source = SeriesSource.ARSINH if power == 1 else SeriesSource.ARSINH_SQ
    return SeriesExpansion(coeffs, source)


def _check_order(order, power: int, name: str) -> int:
    if isinstance(order, bool) or int(order) != order:
        raise ValueError(f"{name}: order must be an integer, got {order!r}")
    order = int(order)
    if order < power:
        raise ValueError(f"{name}: order must be >= power ({power}), got {order}")
    return order


def _power_coefficients(power: int, order: int, alternating: bool) -> np.ndarray:
    w = wallis_value_array(order)
    coeffs = np.zeros(order + 1, dtype=np.float64)
    if power in (1, 3):
        for n in range(0, (order - 1) // 2 + 1):
            i = 2 * n + 1
            if power == 1:
                c = w[2 * n] / i
            else:
                c = 6.0 * odd_harmonic2(n) * w[2 * n] / i
            if alternating and n % 2 == 1:
                c = -c
            coeffs[i] = c
    else:
        for n in range(1, order // 2 + 1):
            i = 2 * n
            if power == 2:
                c = 0.5 / (w[i] * n * n)
            else:
                c = 1.5 * harmonic(n - 1, 2) / (w[i] * n * n)
            if alternating and n % 2 == 0:
                c = -c
            coeffs[i] = c
    return coeffs


def integrate_over_y(s: SeriesExpansion) -> SeriesExpansion:
    """Termwise map of f to the integral of f(y)/y over y in [0, t].

    Divides the coefficient of t^i by i; requires a zero constant term
    (otherwise the integrand is singular at the origin).
    """
    coeffs = s.coefficients
    if coeffs[0] != 0.0:
        raise ValueError("integrate_over_y: series must have zero constant term")
    out = np.zeros_like(coeffs)
    idx = np.arange(1, coeffs.size, dtype=np.float64)
    out[1:] = coeffs[1:] / idx
    return SeriesExpansion(out, SeriesSource.INTEGRATED_KERNEL)


def evaluate_series(s: SeriesExpansion, t: float) -> float:
    """Compensated Horner evaluation of the truncated series at t, |t| <= 1."""
    t = float(t)
    if not -1.0 <= t <= 1.0:
        raise ValueError(f"evaluate_series: |t| must be <= 1, got {t!r}")
    return kernels.horner_eval(s.coefficients, t)


def convolve(a: SeriesExpansion, b: SeriesExpansion) -> SeriesExpansion:
    """Cauchy product of two expansions, truncated to the smaller order."""
    keep = min(a.order, b.order) + 1
    full = np.convolve(a.coefficients, b.coefficients)
    return SeriesExpansion(full[:keep], SeriesSource.CONVOLUTION_ORACLE)
