# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; see ``_pykernels.py`` for the reference semantics."""
from libc.math cimport exp, log, log1p, expm1, sinh, cosh, atan2, hypot, cos, sin, pow, fabs, M_PI

BACKEND = "cython"

cdef double _C2 = 1.0 / 5, _C3 = 3.0 / 10, _C4 = 4.0 / 5, _C5 = 8.0 / 9
cdef double _A21 = 1.0 / 5
cdef double _A31 = 3.0 / 40, _A32 = 9.0 / 40
cdef double _A41 = 44.0 / 45, _A42 = -56.0 / 15, _A43 = 32.0 / 9
cdef double _A51 = 19372.0 / 6561, _A52 = -25360.0 / 2187, _A53 = 64448.0 / 6561, _A54 = -212.0 / 729
cdef double _A61 = 9017.0 / 3168, _A62 = -355.0 / 33, _A63 = 46732.0 / 5247, _A64 = 49.0 / 176, _A65 = -5103.0 / 18656
cdef double _B1 = 35.0 / 384, _B3 = 500.0 / 1113, _B4 = 125.0 / 192, _B5 = -2187.0 / 6784, _B6 = 11.0 / 84
cdef double _E1 = 71.0 / 57600, _E3 = -71.0 / 16695, _E4 = 71.0 / 1920, _E5 = -17253.0 / 339200, _E6 = 22.0 / 525, _E7 = -1.0 / 40


cdef inline double complex _cpowr(double complex z, double b) nogil:
    # principal value of z**b for real b
    cdef double r = hypot(z.real, z.imag)
    cdef double th = atan2(z.imag, z.real)
    cdef double lr = b * log(r)
    cdef double ang = b * th
    cdef double mag = exp(lr)
    return mag * cos(ang) + 1j * (mag * sin(ang))


cdef inline double complex _cipow(double complex z, int n) nogil:
    cdef double complex result = 1.0
    cdef double complex base = z
    while n > 0:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


cdef inline double _cabs(double complex z) nogil:
    return hypot(z.real, z.imag)


def ts_sum_origin(double wpr, double wpi, double e0r, double e0i, double sgn,
                  double b, int m, int p, double h, long k0, long kstep, long kmax):
    cdef double complex wp = wpr + 1j * wpi
    cdef double complex e0 = e0r + 1j * e0i
    cdef double complex acc = 0.0
    cdef double complex base, val
    cdef double u, e, t, d, wt, q
    cdef long k = k0
    cdef int side, nside
    while k <= kmax:
        nside = 1 if k == 0 else 2
        for side in range(nside):
            u = k * h if side == 0 else -k * h
            e = exp(-M_PI * sinh(u))
            t = 1.0 / (1.0 + e)
            d = e / (1.0 + e)
            wt = M_PI * cosh(u) * t * d
            if wt == 0.0:
                continue
            if t < 0.5:
                base = 1.0 + sgn * wp * pow(t, p)
            else:
                q = -expm1(p * log1p(-d))
                base = e0 - sgn * wp * q
            if base.real == 0.0 and base.imag == 0.0:
                continue
            val = _cpowr(base, b)
            if m:
                val = val * pow(t, m)
            acc = acc + wt * val
        k += kstep
    return acc.real, acc.imag


def ts_sum_to_one(double x, int p, double b, double h, long k0, long kstep, long kmax):
    cdef double span = 1.0 - x
    cdef double acc = 0.0
    cdef double u, e, t, d, wt, base
    cdef long k = k0
    cdef int side, nside
    while k <= kmax:
        nside = 1 if k == 0 else 2
        for side in range(nside):
            u = k * h if side == 0 else -k * h
            e = exp(-M_PI * sinh(u))
            t = 1.0 / (1.0 + e)
            d = e / (1.0 + e)
            wt = M_PI * cosh(u) * t * d
            if wt == 0.0:
                continue
            # 1 - xi = span * d exactly, on both halves of the interval
            base = -expm1(p * log1p(-span * d))
            if base <= 0.0:
                continue
            acc += wt * exp(b * log(base))
        k += kstep
    return acc


def dp54_march(int p, double s0r, double s0i, double c0r, double c0i,
               double dzr, double dzi, double tol, double hmin, double h0):
    cdef int pm1 = p - 1
    cdef double complex s = s0r + 1j * s0i
    cdef double complex c = c0r + 1j * c0i
    cdef double complex dz = dzr + 1j * dzi
    cdef double length = _cabs(dz)
    cdef double tau = 0.0, h, scale, err, allowed, fac, drift, max_drift = 0.0
    cdef long naccept = 0, nreject = 0
    cdef double complex k1s, k1c, k2s, k2c, k3s, k3c, k4s, k4c, k5s, k5c
    cdef double complex k6s, k6c, k7s, k7c, st, ct, sn, cn, es, ec, sp, cp
    if length == 0.0:
        return s.real, s.imag, c.real, c.imag, 0, 0, 0.0, True
    h = h0 / length
    if h > 1.0:
        h = 1.0
    k1s = dz * _cipow(c, pm1)
    k1c = -dz * _cipow(s, pm1)
    while tau < 1.0:
        if tau + h > 1.0:
            h = 1.0 - tau
        st = s + h * _A21 * k1s
        ct = c + h * _A21 * k1c
        k2s = dz * _cipow(ct, pm1); k2c = -dz * _cipow(st, pm1)
        st = s + h * (_A31 * k1s + _A32 * k2s)
        ct = c + h * (_A31 * k1c + _A32 * k2c)
        k3s = dz * _cipow(ct, pm1); k3c = -dz * _cipow(st, pm1)
        st = s + h * (_A41 * k1s + _A42 * k2s + _A43 * k3s)
        ct = c + h * (_A41 * k1c + _A42 * k2c + _A43 * k3c)
        k4s = dz * _cipow(ct, pm1); k4c = -dz * _cipow(st, pm1)
        st = s + h * (_A51 * k1s + _A52 * k2s + _A53 * k3s + _A54 * k4s)
        ct = c + h * (_A51 * k1c + _A52 * k2c + _A53 * k3c + _A54 * k4c)
        k5s = dz * _cipow(ct, pm1); k5c = -dz * _cipow(st, pm1)
        st = s + h * (_A61 * k1s + _A62 * k2s + _A63 * k3s + _A64 * k4s + _A65 * k5s)
        ct = c + h * (_A61 * k1c + _A62 * k2c + _A63 * k3c + _A64 * k4c + _A65 * k5c)
        k6s = dz * _cipow(ct, pm1); k6c = -dz * _cipow(st, pm1)
        sn = s + h * (_B1 * k1s + _B3 * k3s + _B4 * k4s + _B5 * k5s + _B6 * k6s)
        cn = c + h * (_B1 * k1c + _B3 * k3c + _B4 * k4c + _B5 * k5c + _B6 * k6c)
        k7s = dz * _cipow(cn, pm1); k7c = -dz * _cipow(sn, pm1)
        es = h * (_E1 * k1s + _E3 * k3s + _E4 * k4s + _E5 * k5s + _E6 * k6s + _E7 * k7s)
        ec = h * (_E1 * k1c + _E3 * k3c + _E4 * k4c + _E5 * k5c + _E6 * k6c + _E7 * k7c)
        scale = 1.0 + max(max(_cabs(s), _cabs(c)), max(_cabs(sn), _cabs(cn)))
        err = max(_cabs(es), _cabs(ec)) / scale
        allowed = tol * h * length
        if err == err and err <= allowed:
            tau += h
            s = sn
            c = cn
            k1s = k7s
            k1c = k7c
            naccept += 1
            sp = _cipow(s, p)
            cp = _cipow(c, p)
            drift = _cabs(sp + cp - 1.0) / max(1.0, max(_cabs(sp), _cabs(cp)))
            if drift > max_drift:
                max_drift = drift
            if err == 0.0:
                fac = 5.0
            else:
                fac = min(5.0, max(0.2, 0.9 * pow(allowed / err, 0.25)))
        else:
            nreject += 1
            if err != err:
                fac = 0.2
            else:
                fac = min(1.0, max(0.2, 0.9 * pow(allowed / err, 0.25)))
        h *= fac
        if h * length < hmin and tau < 1.0 and 1.0 - tau > h:
            return s.real, s.imag, c.real, c.imag, naccept, nreject, max_drift, False
    return s.real, s.imag, c.real, c.imag, naccept, nreject, max_drift, True


def taylor_recurrence(int p, int n):
    cdef int alpha = p - 1
    cdef list a = [0.0] * n
    cdef list bb = [0.0] * n
    cdef double[:] av, bv, g, qq
    cdef int j, k, mq
    cdef double acc
    import array
    av = array.array("d", [0.0] * n)
    bv = array.array("d", [0.0] * n)
    g = array.array("d", [0.0] * n)
    qq = array.array("d", [0.0] * n)
    bv[0] = 1.0
    g[0] = 1.0
    if n > 1:
        av[1] = 1.0
    qq[0] = 1.0
    for j in range(n - 1):
        if j >= 1 and alpha == 1:
            g[j] = bv[j]
        elif j >= 1:
            acc = 0.0
            for k in range(1, j + 1):
                if bv[k] != 0.0 and g[j - k] != 0.0:
                    acc += ((alpha + 1) * k - j) * bv[k] * g[j - k]
            g[j] = acc / j
        av[j + 1] = g[j] / (j + 1)
        mq = j - p + 1
        if mq >= 1 and alpha == 1:
            qq[mq] = av[mq + 1]
        elif mq >= 1:
            acc = 0.0
            for k in range(1, mq + 1):
                if av[k + 1] != 0.0 and qq[mq - k] != 0.0:
                    acc += ((alpha + 1) * k - mq) * av[k + 1] * qq[mq - k]
            qq[mq] = acc / mq
        if mq >= 0:
            bv[j + 1] = -qq[mq] / (j + 1)
    for j in range(n):
        a[j] = av[j]
        bb[j] = bv[j]
    return a, bb
