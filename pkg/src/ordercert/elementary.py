"""Certified elementary functions on intervals.

No floating-point library is trusted anywhere in this file.  Each
function reduces its argument with exact rational arithmetic, sums an
explicit series in interval arithmetic at a guarded working precision,
and adds a rigorous tail bound before rounding outward.  Slow compared
to hardware floats, but every enclosure is a theorem.

Conventions: the `bits` argument is the precision of the returned
interval; internal work happens at bits + 15.  arg_principal takes
values in (-pi, pi] and refuses boxes that meet the ray (-inf, 0].
"""

from __future__ import annotations

from . import dyadic
from .dyadic import rational, sqrt_down, sqrt_up
from .errors import DomainViolation, PrecisionCollapse
from .intervals import ComplexBox, RealInterval

_R = rational
_GUARD = 15

_pi_cache = {}
_log2_cache = {}


def _thr(w):
    return _R(1, 1 << (w + 5))


def _sym(bound, w):
    """Symmetric interval [-bound, bound] used for series tails."""
    return RealInterval(-bound, bound, w)


# ---- arctangent ----


def _atan_small(x, w):
    """Enclosure of atan over x, assuming x.max_abs() <= 1/2.

    Alternating series; the first omitted term bounds the tail because
    successive terms shrink by at least |x|^2 < 1.  Terms are rounded
    at w bits but accumulated exactly, with one final rounding.
    """
    thr = _thr(w)
    x2 = x.sq()
    power = x
    acc_lo, acc_hi = x.lo, x.hi
    k = 1
    sign = -1
    while power.max_abs() > thr:
        power = power * x2
        term = power.scale(_R(sign, 2 * k + 1))
        acc_lo += term.lo
        acc_hi += term.hi
        sign = -sign
        k += 1
        if k > 10 * w + 100:
            raise PrecisionCollapse("atan series failed to converge")
    tail = power.max_abs() * x.max_abs() * x.max_abs() / (2 * k + 1)
    return RealInterval(acc_lo, acc_hi, w) + _sym(tail, w)


def _atan_point(q, w):
    """Enclosure of atan at an exact rational point."""
    if q < 0:
        return -_atan_point(-q, w)
    if q > 1:
        return pi_interval(w) / 2 - _atan_point(1 / q, w)
    x = RealInterval(q, q, w)
    if 2 * q > 1:
        # atan(q) = 2 atan(q / (1 + sqrt(1 + q^2))); lands below 1/2
        root = sqrt_pos(RealInterval.exact(1 + q * q, w), w)
        x = x / (root + 1)
        return _atan_small(x, w) * 2
    return _atan_small(x, w)


def atan_interval(x, bits):
    w = bits + _GUARD
    lo = _atan_point(x.lo, w)
    hi = _atan_point(x.hi, w)
    return RealInterval(lo.lo, hi.hi).widen_to_precision(bits)


def pi_interval(bits):
    """Machin: pi = 16 atan(1/5) - 4 atan(1/239)."""
    hit = _pi_cache.get(bits)
    if hit is not None:
        return hit
    w = bits + _GUARD
    a = _atan_small(RealInterval.exact(_R(1, 5), w), w)
    b = _atan_small(RealInterval.exact(_R(1, 239), w), w)
    val = (a * 16 - b * 4).widen_to_precision(bits)
    _pi_cache[bits] = val
    return val


# ---- square roots ----


def sqrt_pos(x, bits):
    if x.lo < 0:
        raise DomainViolation("sqrt of interval %r reaching below zero" % (x,))
    return RealInterval(sqrt_down(x.lo, bits), sqrt_up(x.hi, bits), bits)


def modulus(z, bits):
    return sqrt_pos(z.modulus_sq(), bits)


# ---- sine and cosine ----


def _sin_series(u, w):
    thr = _thr(w)
    umax2 = u.max_abs() ** 2
    u2 = u.sq()
    term = u
    acc_lo, acc_hi = u.lo, u.hi
    j = 1
    while True:
        den = (2 * j) * (2 * j + 1)
        if 2 * umax2 <= den and term.max_abs() <= thr:
            break
        term = (term * u2).scale(_R(-1, den))
        acc_lo += term.lo
        acc_hi += term.hi
        j += 1
        if j > 10 * w + 100:
            raise PrecisionCollapse("sin series failed to converge")
    nxt = term.max_abs() * umax2 / den
    return RealInterval(acc_lo, acc_hi, w) + _sym(2 * nxt, w)


def _cos_series(u, w):
    thr = _thr(w)
    umax2 = u.max_abs() ** 2
    u2 = u.sq()
    term = RealInterval.exact(1, w)
    acc_lo, acc_hi = term.lo, term.hi
    j = 1
    while True:
        den = (2 * j - 1) * (2 * j)
        if 2 * umax2 <= den and term.max_abs() <= thr:
            break
        term = (term * u2).scale(_R(-1, den))
        acc_lo += term.lo
        acc_hi += term.hi
        j += 1
        if j > 10 * w + 100:
            raise PrecisionCollapse("cos series failed to converge")
    nxt = term.max_abs() * umax2 / den
    return RealInterval(acc_lo, acc_hi, w) + _sym(2 * nxt, w)


_FULL = RealInterval(-1, 1)


def _clamp_unit(x, bits):
    out = x.intersect(_FULL)
    if out is None:
        raise PrecisionCollapse("sin/cos enclosure escaped [-1, 1]")
    return out.widen_to_precision(bits)


def _sincos(x, bits):
    w = bits + _GUARD
    if x.diameter() >= 7:
        # wider than a full period: only the trivial bound survives
        full = _FULL.widen_to_precision(bits)
        return full, full
    half_pi = pi_interval(w) / 2
    k = dyadic.nearest_int(x.midpoint() / half_pi.midpoint())
    u = x - half_pi * k
    s = _sin_series(u, w)
    c = _cos_series(u, w)
    quadrant = k % 4
    if quadrant == 0:
        pair = (s, c)
    elif quadrant == 1:
        pair = (c, -s)
    elif quadrant == 2:
        pair = (-s, -c)
    else:
        pair = (-c, s)
    return _clamp_unit(pair[0], bits), _clamp_unit(pair[1], bits)


def sin_interval(x, bits):
    return _sincos(x, bits)[0]


def cos_interval(x, bits):
    return _sincos(x, bits)[1]


def exp_i(t, bits):
    """Enclosure of e^{it} = cos t + i sin t."""
    s, c = _sincos(t, bits)
    return ComplexBox(c, s)


# ---- logarithms ----


def _atanh_series(t, w, t_abs):
    """Enclosure of atanh at a point with |t| <= 1/3, as interval sum.

    t is a point interval; t_abs the exact rational |t|.
    """
    thr = _thr(w)
    t2 = t.sq()
    term = t
    acc_lo, acc_hi = t.lo, t.hi
    j = 1
    while term.max_abs() > thr:
        term = term * t2
        piece = term.scale(_R(1, 2 * j + 1))
        acc_lo += piece.lo
        acc_hi += piece.hi
        j += 1
        if j > 10 * w + 100:
            raise PrecisionCollapse("atanh series failed to converge")
    # remaining terms: geometric with ratio t^2 < 1/9
    tail = term.max_abs() * t_abs * t_abs / (2 * j + 1) * _R(9, 8)
    return RealInterval(acc_lo, acc_hi, w) + _sym(tail, w)


def _log2_interval(w):
    hit = _log2_cache.get(w)
    if hit is not None:
        return hit
    third = _R(1, 3)
    val = _atanh_series(RealInterval.exact(third, w), w, third) * 2
    _log2_cache[w] = val
    return val


def _log_point(q, w):
    """Enclosure of log at an exact rational q > 0."""
    e = q.numerator.bit_length() - q.denominator.bit_length()
    m = q / _R(1 << e) if e >= 0 else q * (1 << (-e))
    if 4 * m < 3:
        m = m * 2
        e -= 1
    # now 3/4 <= m < 2, so |t| < 1/3 and the atanh series applies
    t = (m - 1) / (m + 1)
    body = _atanh_series(RealInterval.exact(t, w), w, abs(t)) * 2
    if e == 0:
        return body
    return body + _log2_interval(w) * e


def log_pos(x, bits):
    """Enclosure of log over a strictly positive interval."""
    if x.lo <= 0:
        raise DomainViolation("log of interval %r reaching zero" % (x,))
    w = bits + _GUARD
    lo = _log_point(x.lo, w)
    hi = _log_point(x.hi, w)
    return RealInterval(lo.lo, hi.hi).widen_to_precision(bits)


# ---- argument and complex logarithm ----


def box_meets_branch_ray(z) -> bool:
    """Does the box meet the closed ray (-inf, 0]?"""
    return z.im.contains(0) and z.re.lo <= 0


def arg_principal(z, bits):
    """Enclosure of arg over a box provably avoiding (-inf, 0]."""
    if box_meets_branch_ray(z):
        raise DomainViolation("arg of box %r meeting the ray (-inf, 0]" % (z,))
    w = bits + _GUARD
    a, b = z.re, z.im
    if b.is_positive():
        out = pi_interval(w) / 2 - atan_interval(a / b, w)
    elif b.is_negative():
        out = -pi_interval(w) / 2 - atan_interval(a / b, w)
    else:
        # ray excluded with im spanning zero forces the right half plane
        out = atan_interval(b / a, w)
    return out.widen_to_precision(bits)


def complex_log(z, bits):
    """Principal branch of log over a box avoiding (-inf, 0]."""
    msq = z.modulus_sq()
    if msq.lo <= 0:
        raise DomainViolation("log of box %r that cannot exclude zero" % (z,))
    w = bits + _GUARD
    re = log_pos(msq, w) / 2
    im = arg_principal(z, w)
    return ComplexBox(re, im).widen_to_precision(bits)


def sqrt_box(z, bits):
    """Principal square root of a box avoiding (-inf, 0]."""
    w = bits + _GUARD
    r = modulus(z, w)
    if r.lo <= 0:
        raise DomainViolation("sqrt of box %r that cannot exclude zero" % (z,))
    half_arg = arg_principal(z, w) / 2
    root = sqrt_pos(r, w)
    s, c = _sincos(half_arg, w)
    return ComplexBox(root * c, root * s).widen_to_precision(bits)
