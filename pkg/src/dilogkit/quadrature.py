"""Integral transforms via composite Gauss-Legendre quadrature.

Every transform removes its endpoint singularity with a trigonometric
substitution first (u = sin(theta) or x = cos(theta)), so a single smooth
Gauss-Legendre driver serves them all.  Each result carries an error
estimate obtained by halving the panel width once and comparing.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

__all__ = [
    "QuadratureConfig",
    "QuadResult",
    "Integrand",
    "MENU",
    "default_config",
    "monomial_integrand",
    "wallis_transform",
    "generalized_wallis_transform",
    "arccos_kernel_transform",
    "lemma4_transform",
    "cot_kernel_integral",
    "arctan_arccot_integral",
    "arctan_squared_integral",
    "wallis_coefficient_weights",
]

DEFAULT_NODES = 32
DEFAULT_PANELS = 8
GUARD_EPS = 1e-8
PANELS_ENV = "DILOGKIT_PANELS"


@dataclass(frozen=True)
class QuadratureConfig:
    """Composite Gauss-Legendre settings."""

    nodes_per_panel: int = DEFAULT_NODES
    panels: int = DEFAULT_PANELS
    target_tol: float = 1e-12
    max_refinements: int = 1

    def __post_init__(self) -> None:
        if self.nodes_per_panel < 4:
            raise ValueError(
                f"QuadratureConfig: nodes_per_panel must be >= 4, got {self.nodes_per_panel}"
            )
        if self.panels < 1:
            raise ValueError(f"QuadratureConfig: panels must be >= 1, got {self.panels}")
        if not self.target_tol >= 1e-14:
            raise ValueError(
                f"QuadratureConfig: target_tol must be >= 1e-14, got {self.target_tol}"
            )
        if self.max_refinements < 0:
            raise ValueError(
                f"QuadratureConfig: max_refinements must be >= 0, got {self.max_refinements}"
            )


def default_config() -> QuadratureConfig:
    """Default settings; the DILOGKIT_PANELS env var overrides the panel count."""
    panels = DEFAULT_PANELS
    raw = os.environ.get(PANELS_ENV)
    if raw is not None:
        try:
            panels = int(raw)
        except ValueError:
            raise ValueError(f"{PANELS_ENV} must be a positive integer, got {raw!r}") from None
        if panels < 1:
            raise ValueError(f"{PANELS_ENV} must be a positive integer, got {raw!r}")
    return QuadratureConfig(panels=panels)


class QuadResult(NamedTuple):
    """A quadrature value plus the panel-halving error estimate."""

    value: float
    error_estimate: float


@dataclass(frozen=True)
class Integrand:
    """A scalar/ndarray-callable f on [0, 1] with its slope at 0.

    ``derivative_at_zero`` feeds the removable-singularity guard of the
    arccos-kernel transform: f(c)/c -> f'(0) as c -> 0.
    """

    fn: Callable[[np.ndarray], np.ndarray]
    tag: str
    derivative_at_zero: float


def _combo(x):
    a = np.arcsin(x)
    return a + a * a / np.pi


MENU: dict[str, Integrand] = {
    "arcsin": Integrand(np.arcsin, "arcsin", 1.0),
    "arcsin2-over-pi": Integrand(lambda x: np.arcsin(x) ** 2 / np.pi, "arcsin2-over-pi", 0.0),
    "arcsin-combo": Integrand(_combo, "arcsin-combo", 1.0),
    "arsinh": Integrand(np.arcsinh, "arsinh", 1.0),
    "half-arsinh2": Integrand(lambda x: 0.5 * np.arcsinh(x) ** 2, "half-arsinh2", 0.0),
    "half-arcsin2": Integrand(lambda x: 0.5 * np.arcsin(x) ** 2, "half-arcsin2", 0.0),
}


def monomial_integrand(m: int) -> Integrand:
    """x^m as an Integrand (m = 0 gives the constant 1)."""
    if m < 0:
        raise ValueError(f"monomial_integrand: m must be >= 0, got {m}")
    if m == 0:
        return Integrand(lambda x: np.ones_like(np.asarray(x, dtype=np.float64)), "x^0", 0.0)
    return Integrand(lambda x: np.asarray(x, dtype=np.float64) ** m, f"x^{m}", 1.0 if m == 1 else 0.0)


# ---------------------------------------------------------------------------
# composite Gauss-Legendre driver
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _gl_rule(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(nodes)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _composite(fn, a: float, b: float, nodes: int, panels: int, tag: str) -> float:
    x, w = _gl_rule(nodes)
    edges = np.linspace(a, b, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    pts = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    vals = np.asarray(fn(pts), dtype=np.float64)
    finite = np.isfinite(vals)
    if not finite.all():
        bad = pts[~finite][0]
        raise ValueError(f"non-finite integrand sample at node x={bad!r} ({tag})")
    wts = (half[:, None] * w[None, :]).ravel()
    return float(vals @ wts)


def _integrate(fn, a: float, b: float, cfg: QuadratureConfig, tag: str) -> QuadResult:
    """Integrate a smooth fn over [a, b]; estimate = |halved - unhalved|.

    At least one halving always runs so that every result carries an
    estimate; max_refinements bounds the extra halvings attempted while
    the estimate still exceeds target_tol.
    """
    if b <= a:
        return QuadResult(0.0, 0.0)
    panels = cfg.panels
    coarse = _composite(fn, a, b, cfg.nodes_per_panel, panels, tag)
    fine = coarse
    err = math.inf
    for _ in range(max(1, cfg.max_refinements)):
        panels *= 2
        fine = _composite(fn, a, b, cfg.nodes_per_panel, panels, tag)
        err = abs(fine - coarse)
        if err <= cfg.target_tol:
            break
        coarse = fine
    return QuadResult(fine, err)


# ---------------------------------------------------------------------------
# the transforms
# ---------------------------------------------------------------------------


def _check_t(t: float, name: str) -> float:
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"{name}: t must lie in [0, 1], got {t!r}")
    return t


def wallis_transform(
    f: Integrand, t: float, cfg: QuadratureConfig | None = None
) -> QuadResult:
    """Chebyshev-weight transform: integral of f(t u)/sqrt(1-u^2) over [0, 1].

    Substituting u = sin(theta) gives the smooth integral of f(t sin(theta))
    over [0, pi/2].
    """
    t = _check_t(t, "wallis_transform")
    cfg = cfg or default_config()
    return _integrate(
        lambda theta: f.fn(t * np.sin(theta)), 0.0, math.pi / 2.0, cfg, f.tag
    )


def generalized_wallis_transform(
    f: Integrand, t: float, alpha: float, cfg: QuadratureConfig | None = None
) -> QuadResult:
    """Partial-range variant: integral of f(t u)/sqrt(1-u^2) over [0, alpha].

    alpha = 1 reduces exactly to wallis_transform (the substituted upper
    limit becomes pi/2); alpha = 0 is the empty interval.
    """
    t = _check_t(t, "generalized_wallis_transform")
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"generalized_wallis_transform: alpha must lie in [0, 1], got {alpha!r}")
    cfg = cfg or default_config()
    upper = math.asin(alpha)
    return _integrate(lambda theta: f.fn(t * np.sin(theta)), 0.0, upper, cfg, f.tag)


def arccos_kernel_transform(
    f: Integrand, t: float, cfg: QuadratureConfig | None = None
) -> QuadResult:
    """Kernel transform: integral of f(t x) arccos(x)/x over [0, 1].

    Substituting x = cos(theta) gives the integral over [0, pi/2] of
    f(t cos(theta)) theta tan(theta), computed in the regular form
    [f(t c)/c] theta sin(theta) with c = cos(theta); for c below the
    guard threshold the removable quotient is replaced by t f'(0).
    """
    t = _check_t(t, "arccos_kernel_transform")
    cfg = cfg or default_config()

    def integrand(theta: np.ndarray) -> np.ndarray:
        c = np.cos(theta)
        quot = np.empty_like(c)
        small = c < GUARD_EPS
        if small.any():
            quot[small] = t * f.derivative_at_zero
        big = ~small
        cb = c[big]
        quot[big] = f.fn(t * cb) / cb
        return quot * theta * np.sin(theta)

    return _integrate(integrand, 0.0, math.pi / 2.0, cfg, f.tag)


def lemma4_transform(t: float, cfg: QuadratureConfig | None = None) -> QuadResult:
    """Single-integral representation of li2 on [0, 1]:

    (8 sqrt(t)/pi) * integral over [0, 1] of
        arcsin(sqrt(t) x) arccos(x) / sqrt(1 - t x^2) dx,

    computed after x = cos(theta) as the smooth integral of
    arcsin(sqrt(t) cos(theta)) theta sin(theta) / sqrt((1-t) + t sin^2(theta)),
    where the denominator form avoids cancellation at t = 1.
    """
    t = _check_t(t, "lemma4_transform")
    cfg = cfg or default_config()
    rt = math.sqrt(t)

    def integrand(theta: np.ndarray) -> np.ndarray:
        s = np.sin(theta)
        denom = np.sqrt((1.0 - t) + t * s * s)
        return np.arcsin(rt * np.cos(theta)) * theta * s / denom

    res = _integrate(integrand, 0.0, math.pi / 2.0, cfg, "lemma4")
    scale = 8.0 * rt / math.pi
    return QuadResult(scale * res.value, scale * res.error_estimate)


def cot_kernel_integral(k: int, cfg: QuadratureConfig | None = None) -> QuadResult:
    """Integral of u^k cot(u) over [0, pi/2] for k in {3, 4}.

    Equals the integral of (arcsin x)^k / x over [0, 1].  Near u = 0 the
    integrand is evaluated through the series u^(k-1)(1 - u^2/3 - u^4/45).
    """
    if k not in (3, 4):
        raise ValueError(f"cot_kernel_integral: k must be 3 or 4, got {k!r}")
    cfg = cfg or default_config()

    def integrand(u: np.ndarray) -> np.ndarray:
        out = np.empty_like(u)
        small = u < 1e-4
        if small.any():
            us = u[small]
            u2 = us * us
            out[small] = us ** (k - 1) * (1.0 - u2 / 3.0 - u2 * u2 / 45.0)
        big = ~small
        ub = u[big]
        out[big] = ub**k / np.tan(ub)
        return out

    return _integrate(integrand, 0.0, math.pi / 2.0, cfg, f"u^{k}*cot")


def arctan_arccot_integral(cfg: QuadratureConfig | None = None) -> QuadResult:
    """Integral of arctan(x) arccot(x) / x over [0, 1].

    arccot(x) = pi/2 - arctan(x); near x = 0 the integrand tends to
    pi/2 - x via arctan(x)/x -> 1.
    """
    cfg = cfg or default_config()

    def integrand(x: np.ndarray) -> np.ndarray:
        out = np.empty_like(x)
        small = x < GUARD_EPS
        if small.any():
            out[small] = math.pi / 2.0 - x[small]
        big = ~small
        xb = x[big]
        at = np.arctan(xb)
        out[big] = at * (math.pi / 2.0 - at) / xb
        return out

    return _integrate(integrand, 0.0, 1.0, cfg, "atan*acot")


def arctan_squared_integral(cfg: QuadratureConfig | None = None) -> QuadResult:
    """Integral of (arctan x)^2 / x over [0, 1]; near 0 the integrand ~ x."""
    cfg = cfg or default_config()

    def integrand(x: np.ndarray) -> np.ndarray:
        out = np.empty_like(x)
        small = x < GUARD_EPS
        if small.any():
            out[small] = x[small]
        big = ~small
        xb = x[big]
        at = np.arctan(xb)
        out[big] = at * at / xb
        return out

    return _integrate(integrand, 0.0, 1.0, cfg, "atan^2")


def wallis_coefficient_weights(order: int) -> np.ndarray:
    """Per-power weights of the coefficientwise transform law.

    Applying the Chebyshev-weight transform to t^m multiplies the
    coefficient by (pi/2) w_m for even m and w_m for odd m; the returned
    array holds that weight at index m for m = 0..order.
    """
    from .series import wallis_value_array

    w = wallis_value_array(order).copy()
    w[0::2] *= math.pi / 2.0
    return w
