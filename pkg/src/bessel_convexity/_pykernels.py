"""Pure-Python numerical kernels.

This module mirrors ``_ckernels.pyx`` function for function. It is used when
the compiled extension is missing or ``BESSEL_CONVEXITY_PURE=1`` is set, and
it is the reference the compiled kernels are tested against.

Conventions shared by both backends
-----------------------------------
``A_mu(w) = sum_n (-w)^n / (n! Gamma(n+mu+1))`` is the entire "analytic part"
of the Bessel function: ``J_mu(z) = (z/2)^mu * A_mu(z^2/4)``.  Every kernel
takes the reciprocal gamma value ``rg = 1/Gamma(mu+1)`` from the caller
(0.0 at a pole), so no gamma evaluation happens inside the hot loops.

Zero families are encoded by ``kind``: 0 for ``J_nu``, 1 for the Dini-type
combination ``p*J_nu(x) - x*J_{nu+1}(x)``.  ``J'_nu`` is the Dini case
``p = nu`` and ``gamma*J + x*J'`` is the case ``p = gamma + nu``.
"""

import math

BACKEND = "python"

EPS = 2.220446049250313e-16
HANKEL_MIN_X = 8.0
HANKEL_FLOOR = 1e-15
_TWO_OVER_PI = 2.0 / math.pi


def series_a(mu, wr, wi, rg0, rel_tol, max_terms):
    """Complex ascending series for ``A_mu(w)``.

    Returns ``(re, im, scale, nterms)`` where ``scale`` is the sum of term
    magnitudes (the cancellation scale) and ``nterms`` is -1 when the series
    did not converge within ``max_terms``.
    """
    if wr == 0.0 and wi == 0.0:
        return rg0, 0.0, abs(rg0), 1
    sr = rg0
    si = 0.0
    cr = 0.0
    ci = 0.0
    scale = abs(rg0)
    pr = 1.0
    pi = 0.0
    rg = rg0
    wabs = math.hypot(wr, wi)
    nwr = -wr
    nwi = -wi
    for n in range(1, max_terms + 1):
        # p_n = p_{n-1} * (-w) / n
        tr = (pr * nwr - pi * nwi) / n
        pi = (pr * nwi + pi * nwr) / n
        pr = tr
        x = n + mu
        rg = rg / x if x != 0.0 else 1.0
        tr = pr * rg
        ti = pi * rg
        # Kahan on each component
        y = tr - cr
        t = sr + y
        cr = (t - sr) - y
        sr = t
        y = ti - ci
        t = si + y
        ci = (t - si) - y
        si = t
        tabs = math.hypot(tr, ti)
        scale += tabs
        if x > 0.0 and n * x > wabs:
            if tabs <= rel_tol * math.hypot(sr, si) or tabs <= 1e-3 * EPS * scale:
                return sr, si, scale, n + 1
    return sr, si, scale, -1


def series_a_real(mu, w, rg0, rel_tol, max_terms):
    """Real-argument version of :func:`series_a`; returns ``(value, scale, nterms)``."""
    if w == 0.0:
        return rg0, abs(rg0), 1
    s = rg0
    c = 0.0
    scale = abs(rg0)
    p = 1.0
    rg = rg0
    wabs = abs(w)
    for n in range(1, max_terms + 1):
        p = -p * w / n
        x = n + mu
        rg = rg / x if x != 0.0 else 1.0
        term = p * rg
        y = term - c
        t = s + y
        c = (t - s) - y
        s = t
        tabs = abs(term)
        scale += tabs
        if x > 0.0 and n * x > wabs:
            if tabs <= rel_tol * abs(s) or tabs <= 1e-3 * EPS * scale:
                return s, scale, n + 1
    return s, scale, -1


def hankel_j(nu, x):
    """Large-argument expansion of ``J_nu(x)`` for real ``x > 0``.

    Truncated at the smallest term. Returns ``(value, err, amp)``; ``err`` is
    the first omitted term relative to the amplitude ``amp = sqrt(2/(pi x))``.
    """
    mu = 4.0 * nu * nu
    p = 1.0
    q = 0.0
    t = 1.0
    prev = 1.0
    err = 0.0
    eight_x = 8.0 * x
    k = 1
    while k < 400:
        odd = 2 * k - 1
        t_next = t * (mu - odd * odd) / (k * eight_x)
        a = abs(t_next)
        if odd * odd > mu and a > prev:
            err = a
            break
        t = t_next
        r = k & 3
        if r == 1:
            q += t
        elif r == 2:
            p -= t
        elif r == 3:
            q -= t
        else:
            p += t
        if a == 0.0 or a < 1e-3 * EPS:
            err = a
            break
        prev = a
        k += 1
    else:
        err = prev
    chi = x - (0.5 * nu + 0.25) * math.pi
    amp = math.sqrt(_TWO_OVER_PI / x)
    return amp * (p * math.cos(chi) - q * math.sin(chi)), err, amp


def jpair_scaled(nu, x, rg0, rg1, rel_tol, max_terms):
    """``J_nu`` and ``J_{nu+1}`` at real ``x >= 0`` divided by ``(x/2)^nu``.

    Returns ``(a0, a1, scale, nterms)`` with ``a0 = A_nu(x^2/4)`` and
    ``a1 = (x/2) A_{nu+1}(x^2/4)``.  Large ``x`` switches to the Hankel
    expansion when its truncation error beats the series' rounding floor.
    """
    if x >= HANKEL_MIN_X:
        series_err = EPS * math.exp(min(x, 700.0)) * 0.5
        j0, e0, amp = hankel_j(nu, x)
        if e0 <= max(HANKEL_FLOOR, series_err):
            j1, e1, _ = hankel_j(nu + 1.0, x)
            if e1 <= max(HANKEL_FLOOR, series_err):
                t = math.exp(nu * math.log(0.5 * x))
                return j0 / t, j1 / t, amp / t, 0
    w = 0.25 * x * x
    a0, s0, n0 = series_a_real(nu, w, rg0, rel_tol, max_terms)
    a1, s1, n1 = series_a_real(nu + 1.0, w, rg1, rel_tol, max_terms)
    if n0 < 0 or n1 < 0:
        return a0, 0.5 * x * a1, max(s0, 0.5 * x * s1), -1
    return a0, 0.5 * x * a1, max(s0, 0.5 * x * s1), max(n0, n1)


def family_eval(kind, nu, p, x, rg0, rg1, rel_tol, max_terms):
    """Scaled family value, its x-derivative and residual scale.

    ``kind == 0``: ``G = J_nu / (x/2)^nu``;
    ``kind == 1``: ``G = (p J_nu - x J_{nu+1}) / (x/2)^nu``.
    """
    a0, a1, sc, n = jpair_scaled(nu, x, rg0, rg1, rel_tol, max_terms)
    if kind == 0:
        return a0, -a1, sc, n
    return p * a0 - x * a1, (2.0 * nu - p) * a1 - x * a0, (abs(p) + x) * sc, n


def _refine(kind, nu, p, lo, hi, glo, rg0, rg1, rel_tol, max_terms):
    # safeguarded Newton inside a sign-change bracket
    x = 0.5 * (lo + hi)
    g = dg = sc = 0.0
    it = 0
    for it in range(1, 121):
        g, dg, sc, n = family_eval(kind, nu, p, x, rg0, rg1, rel_tol, max_terms)
        if n < 0:
            raise ArithmeticError("series did not converge at x=%r" % x)
        if g == 0.0:
            break
        if (g > 0.0) == (glo > 0.0):
            lo = x
        else:
            hi = x
        if hi - lo <= 4.0 * EPS * hi:
            break
        xn = x - g / dg if dg != 0.0 else lo - 1.0
        if not (lo < xn < hi):
            xn = 0.5 * (lo + hi)
        if abs(xn - x) <= 2.0 * EPS * x:
            x = xn
            g, dg, sc, n = family_eval(kind, nu, p, x, rg0, rg1, rel_tol, max_terms)
            break
        x = xn
    return x, abs(g) / sc if sc > 0.0 else abs(g), it


def family_zeros(kind, nu, p, count, rg0, rg1, rel_tol, max_terms, step, x_max):
    """First ``count`` positive zeros of a family by sign-change scan.

    Returns ``(zeros, residuals, evaluations)``; fewer than ``count`` zeros
    means the scan reached ``x_max``.
    """
    zeros = []
    resid = []
    evals = 0
    x0 = 0.0
    g0 = family_eval(kind, nu, p, x0, rg0, rg1, rel_tol, max_terms)[0]
    evals += 1
    if g0 == 0.0:
        x0 = 1e-6
        g0 = family_eval(kind, nu, p, x0, rg0, rg1, rel_tol, max_terms)[0]
        evals += 1
    k = 1
    while len(zeros) < count:
        x1 = k * step
        if x1 > x_max:
            break
        g1, _, sc1, n1 = family_eval(kind, nu, p, x1, rg0, rg1, rel_tol, max_terms)
        evals += 1
        if n1 < 0:
            raise ArithmeticError("series did not converge at x=%r" % x1)
        if g1 == 0.0:
            zeros.append(x1)
            resid.append(0.0)
            # step past the exact zero using the sign just beyond it
            x0 = x1 + 1e-9 * x1
            g0 = family_eval(kind, nu, p, x0, rg0, rg1, rel_tol, max_terms)[0]
        elif (g1 > 0.0) != (g0 > 0.0):
            z, r, it = _refine(kind, nu, p, x0, x1, g0, rg0, rg1, rel_tol, max_terms)
            evals += it
            zeros.append(z)
            resid.append(r)
            x0, g0 = x1, g1
        else:
            x0, g0 = x1, g1
        k += 1
    return zeros, resid, evals


def ml_even(zeros, zr, zi):
    """``sum 2 z^2 / (c^2 - z^2)`` over ``zeros`` (compensated)."""
    z2r = zr * zr - zi * zi
    z2i = 2.0 * zr * zi
    sr = si = cr = ci = 0.0
    for c in zeros:
        dr = c * c - z2r
        di = -z2i
        den = dr * dr + di * di
        tr = 2.0 * (z2r * dr + z2i * di) / den
        ti = 2.0 * (z2i * dr - z2r * di) / den
        y = tr - cr
        t = sr + y
        cr = (t - sr) - y
        sr = t
        y = ti - ci
        t = si + y
        ci = (t - si) - y
        si = t
    return sr, si


def ml_linear(zeros, zr, zi):
    """``sum z / (c^2 - z)`` over ``zeros`` (compensated)."""
    sr = si = cr = ci = 0.0
    for c in zeros:
        dr = c * c - zr
        di = -zi
        den = dr * dr + di * di
        tr = (zr * dr + zi * di) / den
        ti = (zi * dr - zr * di) / den
        y = tr - cr
        t = sr + y
        cr = (t - sr) - y
        sr = t
        y = ti - ci
        t = si + y
        ci = (t - si) - y
        si = t
    return sr, si


def ml_even_dr(zeros, r):
    """d/dr of ``sum 2 r^2 / (c^2 - r^2)`` for real ``r``."""
    s = 0.0
    for c in zeros:
        c2 = c * c
        d = c2 - r * r
        s += 4.0 * r * c2 / (d * d)
    return s


def ml_linear_dr(zeros, r):
    """d/dr of ``sum r / (c^2 - r)`` for real ``r``."""
    s = 0.0
    for c in zeros:
        c2 = c * c
        d = c2 - r
        s += c2 / (d * d)
    return s


def refine_zero(kind, nu, p, lo, hi, rg0, rg1, rel_tol, max_terms):
    """Zero of a family inside ``(lo, hi)``; returns ``(root, resid, iters)``.

    ``iters`` is -1 when the endpoints do not bracket a sign change.
    """
    glo = family_eval(kind, nu, p, lo, rg0, rg1, rel_tol, max_terms)[0]
    ghi = family_eval(kind, nu, p, hi, rg0, rg1, rel_tol, max_terms)[0]
    if glo == 0.0:
        return lo, 0.0, 0
    if ghi == 0.0:
        return hi, 0.0, 0
    if (glo > 0.0) == (ghi > 0.0):
        return 0.5 * (lo + hi), math.inf, -1
    return _refine(kind, nu, p, lo, hi, glo, rg0, rg1, rel_tol, max_terms)
