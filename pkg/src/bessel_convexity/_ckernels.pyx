# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels; see ``_pykernels`` for the reference semantics."""

from libc.math cimport fabs, hypot, exp, log, sqrt, cos, sin, M_PI

BACKEND = "compiled"

cdef double EPS = 2.220446049250313e-16
cdef double HANKEL_MIN_X = 8.0
cdef double HANKEL_FLOOR = 1e-15


cdef inline void _kahan(double *s, double *c, double term) nogil:
    cdef double y = term - c[0]
    cdef double t = s[0] + y
    c[0] = (t - s[0]) - y
    s[0] = t


def series_a(double mu, double wr, double wi, double rg0, double rel_tol, int max_terms):
    cdef double sr = rg0, si = 0.0, cr = 0.0, ci = 0.0
    cdef double scale = fabs(rg0)
    cdef double pr = 1.0, pi = 0.0, tr, ti, x, tabs
    cdef double rg = rg0
    cdef double wabs = hypot(wr, wi)
    cdef int n
    if wr == 0.0 and wi == 0.0:
        return rg0, 0.0, fabs(rg0), 1
    for n in range(1, max_terms + 1):
        tr = (pr * (-wr) - pi * (-wi)) / n
        pi = (pr * (-wi) + pi * (-wr)) / n
        pr = tr
        x = n + mu
        if x != 0.0:
            rg = rg / x
        else:
            rg = 1.0
        tr = pr * rg
        ti = pi * rg
        _kahan(&sr, &cr, tr)
        _kahan(&si, &ci, ti)
        tabs = hypot(tr, ti)
        scale += tabs
        if x > 0.0 and n * x > wabs:
            if tabs <= rel_tol * hypot(sr, si) or tabs <= 1e-3 * EPS * scale:
                return sr, si, scale, n + 1
    return sr, si, scale, -1


cdef double _series_real(double mu, double w, double rg0, double rel_tol,
                         int max_terms, double *scale_out, int *n_out) nogil:
    cdef double s = rg0, c = 0.0, scale = fabs(rg0), p = 1.0, rg = rg0
    cdef double x, term, tabs, wabs = fabs(w)
    cdef int n
    if w == 0.0:
        scale_out[0] = scale
        n_out[0] = 1
        return s
    for n in range(1, max_terms + 1):
        p = -p * w / n
        x = n + mu
        if x != 0.0:
            rg = rg / x
        else:
            rg = 1.0
        term = p * rg
        _kahan(&s, &c, term)
        tabs = fabs(term)
        scale += tabs
        if x > 0.0 and n * x > wabs:
            if tabs <= rel_tol * fabs(s) or tabs <= 1e-3 * EPS * scale:
                scale_out[0] = scale
                n_out[0] = n + 1
                return s
    scale_out[0] = scale
    n_out[0] = -1
    return s


def series_a_real(double mu, double w, double rg0, double rel_tol, int max_terms):
    cdef double scale
    cdef int n
    cdef double s = _series_real(mu, w, rg0, rel_tol, max_terms, &scale, &n)
    return s, scale, n


cdef double _hankel(double nu, double x, double *err_out, double *amp_out) nogil:
    cdef double mu = 4.0 * nu * nu
    cdef double p = 1.0, q = 0.0, t = 1.0, prev = 1.0, err = 0.0
    cdef double eight_x = 8.0 * x, t_next, a, chi, amp
    cdef int k = 1, r
    cdef double odd
    cdef bint done = False
    while k < 400:
        odd = 2 * k - 1
        t_next = t * (mu - odd * odd) / (k * eight_x)
        a = fabs(t_next)
        if odd * odd > mu and a > prev:
            err = a
            done = True
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
            done = True
            break
        prev = a
        k += 1
    if not done:
        err = prev
    chi = x - (0.5 * nu + 0.25) * M_PI
    amp = sqrt(2.0 / (M_PI * x))
    err_out[0] = err
    amp_out[0] = amp
    return amp * (p * cos(chi) - q * sin(chi))


def hankel_j(double nu, double x):
    cdef double err, amp
    cdef double v = _hankel(nu, x, &err, &amp)
    return v, err, amp


cdef int _jpair(double nu, double x, double rg0, double rg1, double rel_tol,
                int max_terms, double *a0, double *a1, double *sc) nogil:
    cdef double series_err, j0, j1, e0, e1, amp, amp1, t, w, s0, s1, lim
    cdef int n0, n1
    if x >= HANKEL_MIN_X:
        series_err = EPS * exp(x if x < 700.0 else 700.0) * 0.5
        lim = series_err if series_err > HANKEL_FLOOR else HANKEL_FLOOR
        j0 = _hankel(nu, x, &e0, &amp)
        if e0 <= lim:
            j1 = _hankel(nu + 1.0, x, &e1, &amp1)
            if e1 <= lim:
                t = exp(nu * log(0.5 * x))
                a0[0] = j0 / t
                a1[0] = j1 / t
                sc[0] = amp / t
                return 0
    w = 0.25 * x * x
    a0[0] = _series_real(nu, w, rg0, rel_tol, max_terms, &s0, &n0)
    a1[0] = 0.5 * x * _series_real(nu + 1.0, w, rg1, rel_tol, max_terms, &s1, &n1)
    s1 *= 0.5 * x
    sc[0] = s0 if s0 > s1 else s1
    if n0 < 0 or n1 < 0:
        return -1
    return n0 if n0 > n1 else n1


def jpair_scaled(double nu, double x, double rg0, double rg1, double rel_tol, int max_terms):
    cdef double a0, a1, sc
    cdef int n = _jpair(nu, x, rg0, rg1, rel_tol, max_terms, &a0, &a1, &sc)
    return a0, a1, sc, n


cdef int _family(int kind, double nu, double p, double x, double rg0, double rg1,
                 double rel_tol, int max_terms, double *g, double *dg, double *sc) nogil:
    cdef double a0, a1, s
    cdef int n = _jpair(nu, x, rg0, rg1, rel_tol, max_terms, &a0, &a1, &s)
    if kind == 0:
        g[0] = a0
        dg[0] = -a1
        sc[0] = s
    else:
        g[0] = p * a0 - x * a1
        dg[0] = (2.0 * nu - p) * a1 - x * a0
        sc[0] = (fabs(p) + x) * s
    return n


def family_eval(int kind, double nu, double p, double x, double rg0, double rg1,
                double rel_tol, int max_terms):
    cdef double g, dg, sc
    cdef int n = _family(kind, nu, p, x, rg0, rg1, rel_tol, max_terms, &g, &dg, &sc)
    return g, dg, sc, n


cdef int _refine(int kind, double nu, double p, double lo, double hi, double glo,
                 double rg0, double rg1, double rel_tol, int max_terms,
                 double *root, double *resid) nogil:
    cdef double x = 0.5 * (lo + hi), g = 0.0, dg = 0.0, sc = 0.0, xn
    cdef int it = 0, n
    for it in range(1, 121):
        n = _family(kind, nu, p, x, rg0, rg1, rel_tol, max_terms, &g, &dg, &sc)
        if n < 0:
            return -1
        if g == 0.0:
            break
        if (g > 0.0) == (glo > 0.0):
            lo = x
        else:
            hi = x
        if hi - lo <= 4.0 * EPS * hi:
            break
        if dg != 0.0:
            xn = x - g / dg
        else:
            xn = lo - 1.0
        if not (lo < xn < hi):
            xn = 0.5 * (lo + hi)
        if fabs(xn - x) <= 2.0 * EPS * x:
            x = xn
            n = _family(kind, nu, p, x, rg0, rg1, rel_tol, max_terms, &g, &dg, &sc)
            break
        x = xn
    root[0] = x
    resid[0] = fabs(g) / sc if sc > 0.0 else fabs(g)
    return it


def family_zeros(int kind, double nu, double p, int count, double rg0, double rg1,
                 double rel_tol, int max_terms, double step, double x_max):
    cdef list zeros = []
    cdef list resid = []
    cdef long evals = 0
    cdef double x0 = 0.0, x1, g0, g1, dg, sc, z, r
    cdef int k = 1, n, it
    _family(kind, nu, p, x0, rg0, rg1, rel_tol, max_terms, &g0, &dg, &sc)
    evals += 1
    if g0 == 0.0:
        x0 = 1e-6
        _family(kind, nu, p, x0, rg0, rg1, rel_tol, max_terms, &g0, &dg, &sc)
        evals += 1
    while len(zeros) < count:
        x1 = k * step
        if x1 > x_max:
            break
        n = _family(kind, nu, p, x1, rg0, rg1, rel_tol, max_terms, &g1, &dg, &sc)
        evals += 1
        if n < 0:
            raise ArithmeticError("series did not converge at x=%r" % x1)
        if g1 == 0.0:
            zeros.append(x1)
            resid.append(0.0)
            x0 = x1 + 1e-9 * x1
            _family(kind, nu, p, x0, rg0, rg1, rel_tol, max_terms, &g0, &dg, &sc)
        elif (g1 > 0.0) != (g0 > 0.0):
            it = _refine(kind, nu, p, x0, x1, g0, rg0, rg1, rel_tol, max_terms, &z, &r)
            if it < 0:
                raise ArithmeticError("series did not converge near x=%r" % x1)
            evals += it
            zeros.append(z)
            resid.append(r)
            x0 = x1
            g0 = g1
        else:
            x0 = x1
            g0 = g1
        k += 1
    return zeros, resid, evals


def ml_even(const double[::1] zeros, double zr, double zi):
    cdef double z2r = zr * zr - zi * zi, z2i = 2.0 * zr * zi
    cdef double sr = 0.0, si = 0.0, cr = 0.0, ci = 0.0
    cdef double c, dr, di, den
    cdef Py_ssize_t i
    with nogil:
        for i in range(zeros.shape[0]):
            c = zeros[i]
            dr = c * c - z2r
            di = -z2i
            den = dr * dr + di * di
            _kahan(&sr, &cr, 2.0 * (z2r * dr + z2i * di) / den)
            _kahan(&si, &ci, 2.0 * (z2i * dr - z2r * di) / den)
    return sr, si


def ml_linear(const double[::1] zeros, double zr, double zi):
    cdef double sr = 0.0, si = 0.0, cr = 0.0, ci = 0.0
    cdef double c, dr, di, den
    cdef Py_ssize_t i
    with nogil:
        for i in range(zeros.shape[0]):
            c = zeros[i]
            dr = c * c - zr
            di = -zi
            den = dr * dr + di * di
            _kahan(&sr, &cr, (zr * dr + zi * di) / den)
            _kahan(&si, &ci, (zi * dr - zr * di) / den)
    return sr, si


def ml_even_dr(const double[::1] zeros, double r):
    cdef double s = 0.0, c2, d
    cdef Py_ssize_t i
    for i in range(zeros.shape[0]):
        c2 = zeros[i] * zeros[i]
        d = c2 - r * r
        s += 4.0 * r * c2 / (d * d)
    return s


def ml_linear_dr(const double[::1] zeros, double r):
    cdef double s = 0.0, c2, d
    cdef Py_ssize_t i
    for i in range(zeros.shape[0]):
        c2 = zeros[i] * zeros[i]
        d = c2 - r
        s += c2 / (d * d)
    return s


def refine_zero(int kind, double nu, double p, double lo, double hi, double rg0,
                double rg1, double rel_tol, int max_terms):
    cdef double glo, ghi, dg, sc, root, resid
    cdef int it
    _family(kind, nu, p, lo, rg0, rg1, rel_tol, max_terms, &glo, &dg, &sc)
    _family(kind, nu, p, hi, rg0, rg1, rel_tol, max_terms, &ghi, &dg, &sc)
    if glo == 0.0:
        return lo, 0.0, 0
    if ghi == 0.0:
        return hi, 0.0, 0
    if (glo > 0.0) == (ghi > 0.0):
        return 0.5 * (lo + hi), float("inf"), -1
    it = _refine(kind, nu, p, lo, hi, glo, rg0, rg1, rel_tol, max_terms, &root, &resid)
    if it < 0:
        raise ArithmeticError("series did not converge in refine_zero")
    return root, resid, it
