# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels.

Mirror of dilogkit._kernels_py with identical operation order; see that
module for the documented semantics.
"""
from libc.math cimport INFINITY


cdef inline double _ipow(double x, int s) noexcept:
    cdef double r = x
    cdef int i
    for i in range(s - 1):
        r *= x
    return r


def power_series_sum(double t, int s, double tol, long nmax):
    """Sum t^n / n^s for n >= 1 with a geometric tail-bound stop."""
    cdef double total = 0.0, comp = 0.0, tk = 1.0
    cdef double term, y, tt, bound = INFINITY
    cdef long n = 0
    while n < nmax:
        n += 1
        tk *= t
        term = tk / _ipow(<double> n, s)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
        if t < 1.0:
            bound = tk * t / ((1.0 - t) * _ipow(<double> (n + 1), s))
            if bound < tol:
                break
    return total, n, bound


def odd_series_sum(double t, int s, bint alternating, double tol, long nmax):
    """Sum over odd k of (+-) t^k / k^s, signs alternating when requested."""
    cdef double total = 0.0, comp = 0.0, tk = t, sign = 1.0
    cdef double term, y, tt, bound = INFINITY
    cdef long k = 1, terms = 0
    while terms < nmax:
        terms += 1
        term = sign * tk / _ipow(<double> k, s)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
        tk *= t * t
        k += 2
        if alternating:
            bound = tk / _ipow(<double> k, s)
            sign = -sign
        elif t < 1.0:
            bound = tk / ((1.0 - t * t) * _ipow(<double> k, s))
        else:
            bound = INFINITY
        if bound < tol:
            break
    return total, terms, bound


def zeta_partial_sum(int s, long n_terms):
    """Kahan-compensated sum of 1/n^s for n = 1..n_terms."""
    cdef double total = 0.0, comp = 0.0
    cdef double term, y, tt
    cdef long n
    for n in range(1, n_terms + 1):
        term = 1.0 / _ipow(<double> n, s)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
    return total


def odd_zeta_partial_sum(int s, long n_terms):
    """Kahan-compensated sum of 1/(2n+1)^s for n = 0..n_terms."""
    cdef double total = 0.0, comp = 0.0
    cdef double term, y, tt
    cdef long n
    for n in range(0, n_terms + 1):
        term = 1.0 / _ipow(<double> (2 * n + 1), s)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
    return total


def euler_sum_odd2_weighted(long n_terms):
    """Sum of O_n / (2n+1)^2, O_n = sum_{k=1..n} 1/(2k-1)^2 kept running."""
    cdef double total = 0.0, comp = 0.0, oh = 0.0, oh_comp = 0.0
    cdef double d, w, term_o, term, y, tt
    cdef long n
    for n in range(1, n_terms + 1):
        d = <double> (2 * n - 1)
        term_o = 1.0 / (d * d)
        y = term_o - oh_comp
        tt = oh + y
        oh_comp = (tt - oh) - y
        oh = tt
        w = <double> (2 * n + 1)
        term = oh / (w * w)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
    return total


def euler_sum_h2_over_n2(long n_terms):
    """Sum of H_{n-1}^(2) / n^2 with a running harmonic update."""
    cdef double total = 0.0, comp = 0.0, h = 0.0, h_comp = 0.0
    cdef double dn, term, term_h, y, tt
    cdef long n
    for n in range(1, n_terms + 1):
        dn = <double> n
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


def euler_sum_odd1sq_over_n2(long n_terms):
    """Sum of (O_n)^2 / n^2, O_n = sum_{k=1..n} 1/(2k-1) kept running."""
    cdef double total = 0.0, comp = 0.0, oh = 0.0, oh_comp = 0.0
    cdef double dn, term_o, term, y, tt
    cdef long n
    for n in range(1, n_terms + 1):
        term_o = 1.0 / <double> (2 * n - 1)
        y = term_o - oh_comp
        tt = oh + y
        oh_comp = (tt - oh) - y
        oh = tt
        dn = <double> n
        term = (oh * oh) / (dn * dn)
        y = term - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
    return total


def horner_eval(const double[::1] coeffs, double t):
    """Horner evaluation of sum coeffs[i] * t^i with compensated additions."""
    cdef double total = 0.0, comp = 0.0
    cdef double p, y, tt
    cdef Py_ssize_t i
    for i in range(coeffs.shape[0] - 1, -1, -1):
        p = total * t
        comp = comp * t
        y = coeffs[i] - comp
        tt = p + y
        comp = (tt - p) - y
        total = tt
    return total
