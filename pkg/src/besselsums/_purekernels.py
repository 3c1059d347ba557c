"""Pure-Python scalar kernels for the hot series loops.

``_fastkernels.pyx`` is the compiled twin with the identical algorithms over C
doubles; ``besselsums.backend`` picks whichever imports.  Each series kernel
uses Neumaier-compensated accumulation and stops once ``consecutive_small``
successive terms are no larger than ``abs_tol + rel_tol * |partial sum|``,
returning ``(value, terms_used, last_term_magnitude, converged)``.

Negative-integer orders make a leading run of series terms vanish exactly at
reciprocal-gamma poles; the Bessel and Tricomi kernels start past that run so
the stop rule never mistakes it for convergence.
"""

import math

_INV_FACTORIAL = tuple(1.0 / float(math.factorial(k)) for k in range(34))


def recip_gamma(a):
    """1/Gamma(a) for finite real a, exactly 0.0 at the poles a = 0, -1, -2, ..."""
    if a == math.floor(a):
        if a <= 0.0:
            return 0.0
        if a <= 34.0:
            return _INV_FACTORIAL[int(a) - 1]
    try:
        g = math.exp(-math.lgamma(a))
    except OverflowError:  # C exp would return inf; mirror the compiled twin
        g = math.inf
    if a > 0.0:
        return g
    # sign of Gamma alternates between consecutive negative-axis poles
    return -g if int(math.floor(a)) & 1 else g


def bessel_j_series(nu, x, abs_tol, rel_tol, max_terms, consecutive_small):
    """Ascending series for J_nu(x): sum_k (-1)^k (x/2)^(2k+nu) / (k! Gamma(nu+k+1))."""
    half = 0.5 * x
    k0 = 0
    if nu < 0.0 and nu == math.floor(nu):
        k0 = int(-nu)
    try:
        term = math.pow(half, 2.0 * k0 + nu) * recip_gamma(nu + k0 + 1.0) * recip_gamma(k0 + 1.0)
    except OverflowError:
        term = math.inf
    if k0 & 1:
        term = -term
    total = 0.0
    comp = 0.0
    streak = 0
    terms = 0
    last_mag = 0.0
    converged = False
    k = float(k0)
    while terms < max_terms:
        if math.isinf(term) or term != term:
            return math.nan, terms + 1, math.inf, False
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        terms += 1
        last_mag = abs(term)
        if last_mag <= abs_tol + rel_tol * abs(total + comp):
            streak += 1
            if streak >= consecutive_small:
                converged = True
                break
        else:
            streak = 0
        term = term * (-(half * half)) / ((k + 1.0) * (nu + k + 1.0))
        k += 1.0
    return total + comp, terms, last_mag, converged


def tricomi_series(alpha, x, abs_tol, rel_tol, max_terms, consecutive_small):
    """Tricomi series C_alpha(x): sum_k (-x)^k / (k! Gamma(alpha+k+1))."""
    k0 = 0
    if alpha < 0.0 and alpha == math.floor(alpha):
        k0 = int(-alpha)
    try:
        term = math.pow(-x, k0) * recip_gamma(alpha + k0 + 1.0) * recip_gamma(k0 + 1.0)
    except OverflowError:
        term = math.inf
    total = 0.0
    comp = 0.0
    streak = 0
    terms = 0
    last_mag = 0.0
    converged = False
    k = float(k0)
    while terms < max_terms:
        if math.isinf(term) or term != term:
            return math.nan, terms + 1, math.inf, False
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        terms += 1
        last_mag = abs(term)
        if last_mag <= abs_tol + rel_tol * abs(total + comp):
            streak += 1
            if streak >= consecutive_small:
                converged = True
                break
        else:
            streak = 0
        term = term * (-x) / ((k + 1.0) * (alpha + k + 1.0))
        k += 1.0
    return total + comp, terms, last_mag, converged


def wright_series(nu, mu, x, abs_tol, rel_tol, max_terms, consecutive_small):
    """Wright series: sum_r x^r / (r! Gamma(nu + mu r)), mu > 0.

    Gamma poles zero out individual terms; a leading all-pole run is skipped
    from the streak count (it carries no convergence information) but still
    consumes budget.
    """
    w = 1.0  # x^r / r!
    total = 0.0
    comp = 0.0
    streak = 0
    terms = 0
    last_mag = 0.0
    converged = False
    seen_nonzero = False
    r = 0
    while terms < max_terms:
        g = recip_gamma(nu + mu * r)
        term = w * g
        if math.isinf(term) or term != term:
            return math.nan, terms + 1, math.inf, False
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        terms += 1
        last_mag = abs(term)
        if term != 0.0:
            seen_nonzero = True
        if seen_nonzero or g != 0.0:
            if last_mag <= abs_tol + rel_tol * abs(total + comp):
                streak += 1
                if streak >= consecutive_small:
                    converged = True
                    break
            else:
                streak = 0
        w *= x / (r + 1.0)
        r += 1
    return total + comp, terms, last_mag, converged
