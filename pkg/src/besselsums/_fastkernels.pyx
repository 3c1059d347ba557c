# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_purekernels``: identical algorithms over C doubles.

Keep the two files in lockstep; ``tests/test_backends.py`` cross-checks them.
"""

import math

from libc.math cimport exp, fabs, floor, lgamma, pow

cdef double NAN = float("nan")
cdef double INF = float("inf")

cdef double[34] _INV_FACT
for _k in range(34):
    _INV_FACT[_k] = 1.0 / float(math.factorial(_k))


cdef inline double _recip_gamma(double a) noexcept:
    cdef double g
    if a == floor(a):
        if a <= 0.0:
            return 0.0
        if a <= 34.0:
            return _INV_FACT[<int> a - 1]
    g = exp(-lgamma(a))
    if a > 0.0:
        return g
    if (<long> floor(a)) & 1:
        return -g
    return g


def recip_gamma(double a):
    """1/Gamma(a) for finite real a, exactly 0.0 at the poles a = 0, -1, -2, ..."""
    return _recip_gamma(a)


def bessel_j_series(double nu, double x, double abs_tol, double rel_tol,
                    int max_terms, int consecutive_small):
    """Ascending series for J_nu(x): sum_k (-1)^k (x/2)^(2k+nu) / (k! Gamma(nu+k+1))."""
    cdef double half = 0.5 * x
    cdef int k0 = 0
    cdef double term, total, comp, t, last_mag, k
    cdef int streak = 0, terms = 0
    cdef bint converged = False
    if nu < 0.0 and nu == floor(nu):
        k0 = <int> (-nu)
    term = pow(half, 2.0 * k0 + nu) * _recip_gamma(nu + k0 + 1.0) * _recip_gamma(k0 + 1.0)
    if k0 & 1:
        term = -term
    total = 0.0
    comp = 0.0
    last_mag = 0.0
    k = k0
    while terms < max_terms:
        if term == INF or term == -INF or term != term:
            return NAN, terms + 1, INF, False
        t = total + term
        if fabs(total) >= fabs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        terms += 1
        last_mag = fabs(term)
        if last_mag <= abs_tol + rel_tol * fabs(total + comp):
            streak += 1
            if streak >= consecutive_small:
                converged = True
                break
        else:
            streak = 0
        term = term * (-(half * half)) / ((k + 1.0) * (nu + k + 1.0))
        k += 1.0
    return total + comp, terms, last_mag, converged


def tricomi_series(double alpha, double x, double abs_tol, double rel_tol,
                   int max_terms, int consecutive_small):
    """Tricomi series C_alpha(x): sum_k (-x)^k / (k! Gamma(alpha+k+1))."""
    cdef int k0 = 0
    cdef double term, total, comp, t, last_mag, k
    cdef int streak = 0, terms = 0
    cdef bint converged = False
    if alpha < 0.0 and alpha == floor(alpha):
        k0 = <int> (-alpha)
    term = pow(-x, k0) * _recip_gamma(alpha + k0 + 1.0) * _recip_gamma(k0 + 1.0)
    total = 0.0
    comp = 0.0
    last_mag = 0.0
    k = k0
    while terms < max_terms:
        if term == INF or term == -INF or term != term:
            return NAN, terms + 1, INF, False
        t = total + term
        if fabs(total) >= fabs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        terms += 1
        last_mag = fabs(term)
        if last_mag <= abs_tol + rel_tol * fabs(total + comp):
            streak += 1
            if streak >= consecutive_small:
                converged = True
                break
        else:
            streak = 0
        term = term * (-x) / ((k + 1.0) * (alpha + k + 1.0))
        k += 1.0
    return total + comp, terms, last_mag, converged


def wright_series(double nu, double mu, double x, double abs_tol, double rel_tol,
                  int max_terms, int consecutive_small):
    """Wright series: sum_r x^r / (r! Gamma(nu + mu r)), mu > 0."""
    cdef double w = 1.0
    cdef double total = 0.0, comp = 0.0, g, term, t, last_mag = 0.0
    cdef int streak = 0, terms = 0, r = 0
    cdef bint converged = False, seen_nonzero = False
    while terms < max_terms:
        g = _recip_gamma(nu + mu * r)
        term = w * g
        if term == INF or term == -INF or term != term:
            return NAN, terms + 1, INF, False
        t = total + term
        if fabs(total) >= fabs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        terms += 1
        last_mag = fabs(term)
        if term != 0.0:
            seen_nonzero = True
        if seen_nonzero or g != 0.0:
            if last_mag <= abs_tol + rel_tol * fabs(total + comp):
                streak += 1
                if streak >= consecutive_small:
                    converged = True
                    break
            else:
                streak = 0
        w *= x / (r + 1.0)
        r += 1
    return total + comp, terms, last_mag, converged
