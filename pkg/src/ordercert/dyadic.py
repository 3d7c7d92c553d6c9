"""Exact rational numbers with directed rounding to dyadics.

Endpoint arithmetic for the interval layer.  All values are exact
rationals; working precision enters only through round_down/round_up,
which round to a dyadic m * 2^e with at most `bits` mantissa bits.
gmpy2 is used when available since its rationals are much faster than
fractions.Fraction, but nothing here depends on which backend is active.
"""

from __future__ import annotations

try:
    import gmpy2
    from gmpy2 import mpq as _Q, mpz as _Z

    def rational(n, d=1):
        return _Q(n, d)

    def _isqrt(n):
        return gmpy2.isqrt(_Z(n))

    _BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _Q
    from math import isqrt as _math_isqrt

    def rational(n, d=1):
        return _Q(n, d)

    def _isqrt(n):
        return _math_isqrt(int(n))

    _BACKEND = "fractions"

ZERO = rational(0)
ONE = rational(1)
TWO = rational(2)
HALF = rational(1, 2)


def is_rational(x) -> bool:
    return isinstance(x, type(ZERO))


def _floor_div_pow2(n, d, k):
    # floor( (n/d) / 2^k ) for n any sign, d > 0
    if k >= 0:
        return n // (d << k)
    return (n << (-k)) // d


def round_down(q, bits):
    """Largest dyadic with <= bits mantissa bits that is <= q.

    bits=None means no rounding (exact passthrough).
    """
    if bits is None:
        return q
    n = q.numerator
    d = q.denominator
    if n == 0:
        return ZERO
    if d & (d - 1) == 0 and n.bit_length() <= bits:
        return q
    # bit-length difference brackets log2|q| within one; start low and
    # shift up until the mantissa fits in `bits`
    e = abs(n).bit_length() - d.bit_length()
    k = e - bits
    m = _floor_div_pow2(n, d, k)
    while abs(m).bit_length() > bits:
        k += 1
        m = _floor_div_pow2(n, d, k)
    if k >= 0:
        return rational(m << k)
    return rational(m, 1 << (-k))


def round_up(q, bits):
    """Smallest dyadic with <= bits mantissa bits that is >= q."""
    if bits is None:
        return q
    return -round_down(-q, bits)


def sqrt_down(q, bits):
    """Dyadic lower bound for sqrt(q), q >= 0 rational."""
    if q < 0:
        raise ValueError("sqrt of negative rational")
    if q == 0:
        return ZERO
    n = q.numerator
    d = q.denominator
    g = bits + 8
    # sqrt(n/d) = sqrt(n*d)/d; scale so the integer sqrt keeps g guard bits
    s = _isqrt((n * d) << (2 * g))
    return round_down(rational(s, d << g), bits)


def sqrt_up(q, bits):
    """Dyadic upper bound for sqrt(q), q >= 0 rational."""
    if q < 0:
        raise ValueError("sqrt of negative rational")
    if q == 0:
        return ZERO
    n = q.numerator
    d = q.denominator
    g = bits + 8
    s = _isqrt((n * d) << (2 * g))
    # (s+1)/(d*2^g) >= sqrt(n/d) since s = floor(sqrt(...))
    return round_up(rational(s + 1, d << g), bits)


def floor_rat(q):
    return q.numerator // q.denominator


def nearest_int(q):
    """Round-half-up nearest integer of a rational, as a Python int."""
    return int(floor_rat(q + HALF))


def parse_decimal(s):
    """Parse a decimal string ('-12.34', '1.5e-3', '7') to an exact rational."""
    text = s.strip()
    if not text:
        raise ValueError("empty decimal string")
    mant = text
    exp = 0
    for echar in ("e", "E"):
        if echar in mant:
            mant, _, etext = mant.partition(echar)
            exp = int(etext)
            break
    sign = 1
    if mant.startswith(("+", "-")):
        if mant[0] == "-":
            sign = -1
        mant = mant[1:]
    if "." in mant:
        ipart, _, fpart = mant.partition(".")
    else:
        ipart, fpart = mant, ""
    if not (ipart or fpart) or not (ipart + fpart).isdigit():
        raise ValueError("bad decimal string: %r" % (s,))
    digits = int(ipart + fpart) if (ipart + fpart) else 0
    q = rational(sign * digits, 10 ** len(fpart))
    if exp > 0:
        q *= 10 ** exp
    elif exp < 0:
        q /= 10 ** (-exp)
    return q


def to_decimal(q):
    """Exact decimal string for a rational whose denominator is 2^a * 5^b.

    Raises ValueError otherwise; callers round to a dyadic first.
    """
    n = int(q.numerator)
    d = int(q.denominator)
    a = 0
    while d % 2 == 0:
        d //= 2
        a += 1
    b = 0
    while d % 5 == 0:
        d //= 5
        b += 1
    if d != 1:
        raise ValueError("rational %s has no finite decimal expansion" % (q,))
    k = max(a, b)
    scaled = n * (2 ** (k - a)) * (5 ** (k - b))
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled))
    if k == 0:
        return sign + digits
    digits = digits.rjust(k + 1, "0")
    whole, frac = digits[:-k], digits[-k:]
    frac = frac.rstrip("0")
    if not frac:
        return sign + whole
    return sign + whole + "." + frac
