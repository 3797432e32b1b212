"""Pure-Python implementations of the numerical hot loops.

These functions mirror ``_ckernels.pyx`` argument for argument; the backend
selector in :mod:`hightrig._backend` picks one of the two at import time.
"""
import cmath
import math

BACKEND = "python"

_PI = math.pi

# Dormand-Prince 5(4) tableau.
_C2, _C3, _C4, _C5 = 1 / 5, 3 / 10, 4 / 5, 8 / 9
_A21 = 1 / 5
_A31, _A32 = 3 / 40, 9 / 40
_A41, _A42, _A43 = 44 / 45, -56 / 15, 32 / 9
_A51, _A52, _A53, _A54 = 19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729
_A61, _A62, _A63, _A64, _A65 = (9017 / 3168, -355 / 33, 46732 / 5247,
                                49 / 176, -5103 / 18656)
_B1, _B3, _B4, _B5, _B6 = 35 / 384, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84
_E1, _E3, _E4, _E5, _E6, _E7 = (71 / 57600, -71 / 16695, 71 / 1920,
                                -17253 / 339200, 22 / 525, -1 / 40)


def _ts_node(u):
    # t = 1/(1+E), d = 1 - t = E/(1+E), dt/du = pi cosh(u) t d
    e = math.exp(-_PI * math.sinh(u))
    t = 1.0 / (1.0 + e)
    d = e / (1.0 + e)
    return t, d, _PI * math.cosh(u) * t * d


def ts_sum_origin(wpr, wpi, e0r, e0i, sgn, b, m, p, h, k0, kstep, kmax):
    """Tanh-sinh node sum for ``int_0^1 t^m (1 + sgn w^p t^p)^b dt``.

    ``e0 = 1 + sgn w^p`` is passed separately so that the base is formed
    without cancellation near ``t = 1``.  Only nodes ``u = k h`` with
    ``k = k0, k0 + kstep, ...`` (and their negatives) up to ``|k| <= kmax``
    contribute; the caller multiplies by ``h`` and the prefactor.
    """
    wp = complex(wpr, wpi)
    e0 = complex(e0r, e0i)
    acc = 0j
    k = k0
    while k <= kmax:
        for kk in ((k,) if k == 0 else (k, -k)):
            t, d, wt = _ts_node(kk * h)
            if wt == 0.0:
                continue
            if t < 0.5:
                base = 1.0 + sgn * wp * t ** p
            else:
                q = -math.expm1(p * math.log1p(-d))
                base = e0 - sgn * wp * q
            if base == 0:
                continue
            val = cmath.exp(b * cmath.log(base))
            if m:
                val *= t ** m
            acc += wt * val
        k += kstep
    return acc.real, acc.imag


def ts_sum_to_one(x, p, b, h, k0, kstep, kmax):
    """Tanh-sinh node sum for ``int_0^1 (1 - xi^p)^b dt``, ``xi = x + (1-x) t``.

    Requires ``0 <= x < 1``; the caller multiplies by ``h (1 - x)``.
    """
    span = 1.0 - x
    acc = 0.0
    k = k0
    while k <= kmax:
        for kk in ((k,) if k == 0 else (k, -k)):
            t, d, wt = _ts_node(kk * h)
            if wt == 0.0:
                continue
            # 1 - xi = span * d exactly, on both halves of the interval
            gap = span * d
            base = 1.0 if gap >= 1.0 else -math.expm1(p * math.log1p(-gap))
            if base <= 0.0:
                continue
            acc += wt * math.exp(b * math.log(base))
        k += kstep
    return acc


def _rhs(s, c, pm1, dz):
    return dz * c ** pm1, -dz * s ** pm1


def dp54_march(p, s0r, s0i, c0r, c0i, dzr, dzi, tol, hmin, h0):
    """Integrate ``s' = c^(p-1), c' = -s^(p-1)`` along ``z0 + tau dz``.

    ``tau`` runs over ``[0, 1]``.  Local error per step is held below
    ``tol * |step|`` in the z-plane, scaled by ``1 + max(|s|, |c|)``.
    Returns ``(s_re, s_im, c_re, c_im, naccept, nreject, max_drift, ok)``
    where ``max_drift`` is the largest relative Pythagorean residual seen
    and ``ok`` is false if the z-step fell below ``hmin``.
    """
    pm1 = p - 1
    s = complex(s0r, s0i)
    c = complex(c0r, c0i)
    dz = complex(dzr, dzi)
    length = abs(dz)
    if length == 0.0:
        return s.real, s.imag, c.real, c.imag, 0, 0, 0.0, True
    tau = 0.0
    h = min(1.0, h0 / length)
    naccept = nreject = 0
    max_drift = 0.0
    k1s, k1c = _rhs(s, c, pm1, dz)
    while tau < 1.0:
        if tau + h > 1.0:
            h = 1.0 - tau
        s2 = s + h * _A21 * k1s
        c2 = c + h * _A21 * k1c
        k2s, k2c = _rhs(s2, c2, pm1, dz)
        s3 = s + h * (_A31 * k1s + _A32 * k2s)
        c3 = c + h * (_A31 * k1c + _A32 * k2c)
        k3s, k3c = _rhs(s3, c3, pm1, dz)
        s4 = s + h * (_A41 * k1s + _A42 * k2s + _A43 * k3s)
        c4 = c + h * (_A41 * k1c + _A42 * k2c + _A43 * k3c)
        k4s, k4c = _rhs(s4, c4, pm1, dz)
        s5 = s + h * (_A51 * k1s + _A52 * k2s + _A53 * k3s + _A54 * k4s)
        c5 = c + h * (_A51 * k1c + _A52 * k2c + _A53 * k3c + _A54 * k4c)
        k5s, k5c = _rhs(s5, c5, pm1, dz)
        s6 = s + h * (_A61 * k1s + _A62 * k2s + _A63 * k3s + _A64 * k4s
                      + _A65 * k5s)
        c6 = c + h * (_A61 * k1c + _A62 * k2c + _A63 * k3c + _A64 * k4c
                      + _A65 * k5c)
        k6s, k6c = _rhs(s6, c6, pm1, dz)
        sn = s + h * (_B1 * k1s + _B3 * k3s + _B4 * k4s + _B5 * k5s + _B6 * k6s)
        cn = c + h * (_B1 * k1c + _B3 * k3c + _B4 * k4c + _B5 * k5c + _B6 * k6c)
        k7s, k7c = _rhs(sn, cn, pm1, dz)
        es = h * (_E1 * k1s + _E3 * k3s + _E4 * k4s + _E5 * k5s + _E6 * k6s
                  + _E7 * k7s)
        ec = h * (_E1 * k1c + _E3 * k3c + _E4 * k4c + _E5 * k5c + _E6 * k6c
                  + _E7 * k7c)
        scale = 1.0 + max(abs(s), abs(c), abs(sn), abs(cn))
        err = max(abs(es), abs(ec)) / scale
        allowed = tol * h * length
        if err == err and err <= allowed:
            tau += h
            s, c = sn, cn
            k1s, k1c = k7s, k7c
            naccept += 1
            sp = s ** p
            cp = c ** p
            drift = abs(sp + cp - 1.0) / max(1.0, abs(sp), abs(cp))
            if drift > max_drift:
                max_drift = drift
            fac = 5.0 if err == 0.0 else min(5.0, max(0.2, 0.9 * (allowed / err) ** 0.25))
        else:
            nreject += 1
            if err != err:
                fac = 0.2
            else:
                fac = min(1.0, max(0.2, 0.9 * (allowed / err) ** 0.25))
        h *= fac
        if h * length < hmin and tau < 1.0 and 1.0 - tau > h:
            return s.real, s.imag, c.real, c.imag, naccept, nreject, max_drift, False
    return s.real, s.imag, c.real, c.imag, naccept, nreject, max_drift, True


def taylor_recurrence(p, n):
    """Taylor coefficients of ``(s, c)`` at 0, indices ``0 .. n-1``.

    Powers of series are formed with the J.C.P. Miller recurrence: ``c^(p-1)``
    directly (``c_0 = 1``) and ``s^(p-1) = z^(p-1) u^(p-1)`` with ``s = z u``.
    Products with zero coefficients are exact, so the residue-class sparsity
    survives floating point.
    """
    alpha = p - 1
    a = [0.0] * n
    bb = [0.0] * n
    g = [0.0] * n   # coefficients of c^(p-1)
    qq = [0.0] * n  # coefficients of u^(p-1), u_k = a_{k+1}
    bb[0] = 1.0
    g[0] = 1.0
    if n > 1:
        a[1] = 1.0
    qq[0] = 1.0
    for j in range(n - 1):
        if j >= 1 and alpha == 1:
            # first powers: Miller's formula would only add cancellation
            g[j] = bb[j]
        elif j >= 1:
            acc = 0.0
            for k in range(1, j + 1):
                if bb[k] != 0.0 and g[j - k] != 0.0:
                    acc += ((alpha + 1) * k - j) * bb[k] * g[j - k]
            g[j] = acc / j
        a[j + 1] = g[j] / (j + 1)
        mq = j - p + 1
        if mq >= 1 and alpha == 1:
            qq[mq] = a[mq + 1]
        elif mq >= 1:
            acc = 0.0
            for k in range(1, mq + 1):
                uk = a[k + 1]
                if uk != 0.0 and qq[mq - k] != 0.0:
                    acc += ((alpha + 1) * k - mq) * uk * qq[mq - k]
            qq[mq] = acc / mq
        bb[j + 1] = -qq[mq] / (j + 1) if mq >= 0 else 0.0
    return a, bb
