"""Pure-Python compute kernels.

Reference implementations of the hot loops; `dilogkit._kernels` is the
compiled mirror with identical semantics and operation order.  Every
accumulation is Kahan-compensated so the two backends agree to a few ulp.
"""
from __future__ import annotations

import math

__all__ = [
    "power_series_sum",
    "odd_series_sum",
    "zeta_partial_sum",
    "odd_zeta_partial_sum",
    "euler_sum_odd2_weighted",
    "euler_sum_h2_over_n2",
    "euler_sum_odd1sq_over_n2",
    "horner_eval",
]


def _ipow(x: float, s: int) -> float:
    # repeated multiplication keeps the float op sequence identical to the
    # compiled backend (libm pow may round differently)
    r = x
    for _ in range(s - 1):
        r *= x
    return r


def power_series_sum(t: float, s: int, tol: float, nmax: int):
    """Sum t^n / n^s for n >= 1 with a geometric tail-bound stop.

    Stops once t^(n+1) / ((1-t) * (n+1)^s) < tol, else after nmax terms.
    Returns (value, terms_used, last_tail_bound).
    """
    total = 0.0
    comp = 0.0
    tk = 1.0
    n = 0
    bound = math.inf
    while n < nmax:
        n += 1
        tk *= t
        term = tk / _ipow(float(n), s)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
        if t < 1.0:
            bound = tk * t / ((1.0 - t) * _ipow(float(n + 1), s))
            if bound < tol:
                break
    return total, n, bound


def odd_series_sum(t: float, s: int, alternating: bool, tol: float, nmax: int):
    """Sum over odd k of (+-) t^k / k^s, signs alternating when requested.

    Non-alternating stop: geometric bound t^(k+2) / ((1-t^2) * (k+2)^s).
    Alternating stop: first omitted term t^(k+2) / (k+2)^s.
    Returns (value, terms_used, last_tail_bound).
    """
    total = 0.0
    comp = 0.0
    tk = t
    k = 1
    sign = 1.0
    terms = 0
    bound = math.inf
    while terms < nmax:
        terms += 1
        term = sign * tk / _ipow(float(k), s)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
        tk *= t * t
        k += 2
        if alternating:
            bound = tk / _ipow(float(k), s)
            sign = -sign
        elif t < 1.0:
            bound = tk / ((1.0 - t * t) * _ipow(float(k), s))
        else:
            bound = math.inf
        if bound < tol:
            break
    return total, terms, bound


def zeta_partial_sum(s: int, n_terms: int) -> float:
    """Kahan-compensated sum of 1/n^s for n = 1..n_terms."""
    total = 0.0
    comp = 0.0
    for n in range(1, n_terms + 1):
        term = 1.0 / _ipow(float(n), s)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
    return total


def odd_zeta_partial_sum(s: int, n_terms: int) -> float:
    """Kahan-compensated sum of 1/(2n+1)^s for n = 0..n_terms."""
    total = 0.0
    comp = 0.0
    for n in range(0, n_terms + 1):
        term = 1.0 / _ipow(float(2 * n + 1), s)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
    return total


def euler_sum_odd2_weighted(n_terms: int) -> float:
    """Sum of O_n / (2n+1)^2 for n = 1..n_terms.

    O_n is the second-order odd harmonic number sum_{k=1..n} 1/(2k-1)^2,
    updated incrementally with its own compensation.
    """
    total = 0.0
    comp = 0.0
    oh = 0.0
    oh_comp = 0.0
    for n in range(1, n_terms + 1):
        d = float(2 * n - 1)
        term_o = 1.0 / (d * d)
        y = term_o - oh_comp
        tt = oh + y
        oh_comp = (tt - oh) - y
        oh = tt
        w = float(2 * n + 1)
        term = oh / (w * w)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
    return total


def euler_sum_h2_over_n2(n_terms: int) -> float:
    """Sum of H_{n-1}^(2) / n^2 for n = 1..n_terms, running harmonic update."""
    total = 0.0
    comp = 0.0
    h = 0.0
    h_comp = 0.0
    for n in range(1, n_terms + 1):
        dn = float(n)
        term = h / (dn * dn)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
        term_h = 1.0 / (dn * dn)
        y = term_h - h_comp
        tt = h + y
        h_comp = (tt - h) - y
        h = tt
    return total


def euler_sum_odd1sq_over_n2(n_terms: int) -> float:
    """Sum of (O_n)^2 / n^2 for n = 1..n_terms.

    O_n is the first-order odd harmonic number sum_{k=1..n} 1/(2k-1).
    """
    total = 0.0
    comp = 0.0
    oh = 0.0
    oh_comp = 0.0
    for n in range(1, n_terms + 1):
        term_o = 1.0 / float(2 * n - 1)
        y = term_o - oh_comp
        tt = oh + y
        oh_comp = (tt - oh) - y
        oh = tt
        dn = float(n)
        term = (oh * oh) / (dn * dn)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
    return total


def horner_eval(coeffs, t: float) -> float:
    """Horner evaluation of sum coeffs[i] * t^i with compensated additions.

    The compensation term is carried through the t-scaling each step; the
    rounding of the two products themselves is second-order for |t| <= 1.
    """
    total = 0.0
    comp = 0.0
    for i in range(len(coeffs) - 1, -1, -1):
        p = total * t
        comp = comp * t
        y = float(coeffs[i]) - comp
        tt = p + y
        comp = (tt - p) - y
        total = tt
    return total
