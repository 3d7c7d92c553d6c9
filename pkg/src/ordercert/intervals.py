"""Real intervals, complex boxes, and 2x2 interval matrices.

Endpoints are exact rationals.  Every arithmetic operation rounds its
result outward to the working precision carried by the operands, so any
chain of operations encloses the exact value it shadows.  A result is
trusted only in the directions intervals can express: disjoint intervals
prove inequality, identical intervals prove nothing.

prec=None means exact mode: no rounding, endpoints grow as needed.
Mixing precisions takes the coarser one.
"""

from __future__ import annotations

from . import dyadic
from .dyadic import rational, round_down, round_up
from .errors import DivisorContainsZero, NotCertifiedSL2

_R = rational


def _combine_prec(p1, p2):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    return min(p1, p2)


def _as_rational(x):
    if dyadic.is_rational(x):
        return x
    if isinstance(x, int):
        return _R(x)
    if isinstance(x, str):
        return dyadic.parse_decimal(x)
    raise TypeError("cannot use %r as an exact endpoint" % (x,))


class RealInterval:
    """A closed interval [lo, hi] with exact rational endpoints."""

    __slots__ = ("lo", "hi", "prec")

    def __init__(self, lo, hi, prec=None):
        lo = _as_rational(lo)
        hi = _as_rational(hi)
        if lo > hi:
            raise ValueError("empty interval: lo=%s > hi=%s" % (lo, hi))
        self.lo = lo
        self.hi = hi
        self.prec = prec

    @classmethod
    def _fast(cls, lo, hi, prec):
        # endpoints already exact rationals with lo <= hi by construction
        self = object.__new__(cls)
        self.lo = lo
        self.hi = hi
        self.prec = prec
        return self

    @classmethod
    def exact(cls, x, prec=None):
        q = _as_rational(x)
        if prec is None:
            return cls._fast(q, q, None)
        return cls._fast(round_down(q, prec), round_up(q, prec), prec)

    @classmethod
    def hull_of(cls, values, prec=None):
        qs = [_as_rational(v) for v in values]
        return cls(min(qs), max(qs), prec)

    def __repr__(self):
        return "RealInterval(%s, %s, prec=%s)" % (self.lo, self.hi, self.prec)

    def __eq__(self, other):
        if not isinstance(other, RealInterval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    # ---- queries ----

    def contains(self, q) -> bool:
        q = _as_rational(q)
        return self.lo <= q <= self.hi

    def excludes(self, q) -> bool:
        """Provably not equal to q.  The exact negation of contains."""
        return not self.contains(q)

    def contains_interval(self, other) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def strictly_contains(self, other) -> bool:
        """other lies in the topological interior of self."""
        return self.lo < other.lo and other.hi < self.hi

    def disjoint_from(self, other) -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def diameter(self):
        return self.hi - self.lo

    def midpoint(self):
        return (self.lo + self.hi) / 2

    def max_abs(self):
        """Largest absolute value of any point in the interval (rational)."""
        return max(abs(self.lo), abs(self.hi))

    def min_abs(self):
        if self.lo > 0:
            return self.lo
        if self.hi < 0:
            return -self.hi
        return dyadic.ZERO

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def sign_definite(self) -> bool:
        return self.lo > 0 or self.hi < 0

    # ---- arithmetic ----

    def _wrap(self, lo, hi, prec):
        return RealInterval._fast(round_down(lo, prec), round_up(hi, prec), prec)

    def __add__(self, other):
        if not isinstance(other, RealInterval):
            other = RealInterval.exact(other)
        p = _combine_prec(self.prec, other.prec)
        return self._wrap(self.lo + other.lo, self.hi + other.hi, p)

    __radd__ = __add__

    def __neg__(self):
        return RealInterval._fast(-self.hi, -self.lo, self.prec)

    def __sub__(self, other):
        if not isinstance(other, RealInterval):
            other = RealInterval.exact(other)
        p = _combine_prec(self.prec, other.prec)
        return self._wrap(self.lo - other.hi, self.hi - other.lo, p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RealInterval):
            if isinstance(other, int) or dyadic.is_rational(other):
                return self.scale(other)
            other = RealInterval.exact(other)
        p = _combine_prec(self.prec, other.prec)
        xl, xh = self.lo, self.hi
        yl, yh = other.lo, other.hi
        # sign dispatch keeps the common cases at two long products
        if xl >= 0:
            if yl >= 0:
                lo, hi = xl * yl, xh * yh
            elif yh <= 0:
                lo, hi = xh * yl, xl * yh
            else:
                lo, hi = xh * yl, xh * yh
        elif xh <= 0:
            if yl >= 0:
                lo, hi = xl * yh, xh * yl
            elif yh <= 0:
                lo, hi = xh * yh, xl * yl
            else:
                lo, hi = xl * yh, xl * yl
        else:
            if yl >= 0:
                lo, hi = xl * yh, xh * yh
            elif yh <= 0:
                lo, hi = xh * yl, xl * yl
            else:
                lo = min(xl * yh, xh * yl)
                hi = max(xl * yl, xh * yh)
        return self._wrap(lo, hi, p)

    __rmul__ = __mul__

    def scale(self, q):
        """Multiply by an exact scalar in one rounding step."""
        if not dyadic.is_rational(q):
            q = _as_rational(q)
        p = self.prec
        if q >= 0:
            return self._wrap(self.lo * q, self.hi * q, p)
        return self._wrap(self.hi * q, self.lo * q, p)

    def sq(self):
        p = self.prec
        if self.lo >= 0:
            return self._wrap(self.lo * self.lo, self.hi * self.hi, p)
        if self.hi <= 0:
            return self._wrap(self.hi * self.hi, self.lo * self.lo, p)
        m = max(-self.lo, self.hi)
        return self._wrap(dyadic.ZERO, m * m, p)

    def recip(self):
        if not self.sign_definite():
            raise DivisorContainsZero("interval %r contains zero" % (self,))
        p = self.prec
        return self._wrap(1 / self.hi, 1 / self.lo, p)

    def __truediv__(self, other):
        if not isinstance(other, RealInterval):
            if isinstance(other, int) or dyadic.is_rational(other):
                if other == 0:
                    raise DivisorContainsZero("division by exact zero")
                return self.scale(1 / _as_rational(other))
            other = RealInterval.exact(other)
        return self * other.recip()

    def __rtruediv__(self, other):
        return RealInterval.exact(other) * self.recip()

    def abs(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RealInterval._fast(dyadic.ZERO, max(-self.lo, self.hi), self.prec)

    # ---- lattice operations ----

    def hull(self, other):
        p = _combine_prec(self.prec, other.prec)
        return RealInterval._fast(min(self.lo, other.lo), max(self.hi, other.hi), p)

    def intersect(self, other):
        """Intersection, or None when provably disjoint."""
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return RealInterval._fast(lo, hi, _combine_prec(self.prec, other.prec))

    def widen_to_precision(self, bits):
        """Round endpoints outward to `bits` and adopt it as the precision."""
        return RealInterval._fast(round_down(self.lo, bits), round_up(self.hi, bits), bits)

    # ---- serialization ----

    def _endpoint_str(self, q, direction):
        bits = self.prec if self.prec is not None else 64
        try:
            return dyadic.to_decimal(q)
        except ValueError:
            if direction < 0:
                return dyadic.to_decimal(round_down(q, bits))
            return dyadic.to_decimal(round_up(q, bits))

    def to_json(self):
        return [self._endpoint_str(self.lo, -1), self._endpoint_str(self.hi, +1)]

    @classmethod
    def from_json(cls, data, prec=None):
        if not (isinstance(data, (list, tuple)) and len(data) == 2):
            raise ValueError("interval JSON must be a [lo, hi] pair")
        return cls(dyadic.parse_decimal(data[0]), dyadic.parse_decimal(data[1]), prec)


class ComplexBox:
    """Axis-aligned rectangle in C: a real interval for each part."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        if not isinstance(re, RealInterval):
            re = RealInterval.exact(re)
        if not isinstance(im, RealInterval):
            im = RealInterval.exact(im)
        self.re = re
        self.im = im

    @classmethod
    def exact(cls, re, im=0, prec=None):
        return cls(RealInterval.exact(re, prec), RealInterval.exact(im, prec))

    @property
    def prec(self):
        return _combine_prec(self.re.prec, self.im.prec)

    def __repr__(self):
        return "ComplexBox(%r, %r)" % (self.re, self.im)

    def __eq__(self, other):
        if not isinstance(other, ComplexBox):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # ---- queries ----

    def contains(self, re_q, im_q=0) -> bool:
        return self.re.contains(re_q) and self.im.contains(im_q)

    def excludes(self, re_q, im_q=0) -> bool:
        """True when (re_q, im_q) is provably outside the box."""
        return not self.contains(re_q, im_q)

    def contains_box(self, other) -> bool:
        return self.re.contains_interval(other.re) and self.im.contains_interval(other.im)

    def strictly_contains(self, other) -> bool:
        return self.re.strictly_contains(other.re) and self.im.strictly_contains(other.im)

    def disjoint_from(self, other) -> bool:
        return self.re.disjoint_from(other.re) or self.im.disjoint_from(other.im)

    def diameter(self):
        return max(self.re.diameter(), self.im.diameter())

    def midpoint(self):
        return (self.re.midpoint(), self.im.midpoint())

    def modulus_sq(self):
        return self.re.sq() + self.im.sq()

    def excludes_zero(self) -> bool:
        # min of re^2 + im^2 over the box is attained coordinatewise
        return self.modulus_sq().lo > 0

    # ---- arithmetic ----

    def __add__(self, other):
        other = _as_box(other)
        return ComplexBox(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexBox(-self.re, -self.im)

    def __sub__(self, other):
        other = _as_box(other)
        return ComplexBox(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RealInterval):
            return ComplexBox(self.re * other, self.im * other)
        other = _as_box(other)
        re = self.re * other.re - self.im * other.im
        im = self.re * other.im + self.im * other.re
        return ComplexBox(re, im)

    __rmul__ = __mul__

    def scale(self, q):
        """Multiply both parts by an exact scalar in one rounding step."""
        return ComplexBox(self.re.scale(q), self.im.scale(q))

    def conj(self):
        return ComplexBox(self.re, -self.im)

    def recip(self):
        msq = self.modulus_sq()
        if not msq.lo > 0:
            raise DivisorContainsZero("box %r cannot exclude zero" % (self,))
        return ComplexBox(self.re / msq, -self.im / msq)

    def __truediv__(self, other):
        if isinstance(other, RealInterval):
            return ComplexBox(self.re / other, self.im / other)
        other = _as_box(other)
        return self * other.recip()

    def __rtruediv__(self, other):
        return _as_box(other) * self.recip()

    def sq(self):
        # (a+bi)^2 with one fewer multiplication than the generic product
        re = self.re.sq() - self.im.sq()
        im = (self.re * self.im) * 2
        return ComplexBox(re, im)

    def hull(self, other):
        return ComplexBox(self.re.hull(other.re), self.im.hull(other.im))

    def intersect(self, other):
        re = self.re.intersect(other.re)
        if re is None:
            return None
        im = self.im.intersect(other.im)
        if im is None:
            return None
        return ComplexBox(re, im)

    def widen_to_precision(self, bits):
        return ComplexBox(self.re.widen_to_precision(bits),
                          self.im.widen_to_precision(bits))

    def to_json(self):
        return {"re": self.re.to_json(), "im": self.im.to_json()}

    @classmethod
    def from_json(cls, data, prec=None):
        if not (isinstance(data, dict) and "re" in data and "im" in data):
            raise ValueError("box JSON must have 're' and 'im' fields")
        return cls(RealInterval.from_json(data["re"], prec),
                   RealInterval.from_json(data["im"], prec))


def _as_box(x):
    if isinstance(x, ComplexBox):
        return x
    if isinstance(x, RealInterval):
        return ComplexBox(x, RealInterval.exact(0))
    return ComplexBox.exact(x)


class IntervalMatrix2:
    """2x2 matrix of complex boxes.

    certified_sl2 marks matrices whose determinant is exactly 1 by
    construction (products of certified generators, adjugate inverses).
    Plain interval evidence never sets it; the modules that build
    holonomy representations do, after checking det on exact data.
    The determinant enclosure is computed from the entries on demand.
    """

    __slots__ = ("a", "b", "c", "d", "certified_sl2", "_det")

    def __init__(self, a, b, c, d, certified_sl2=False):
        self.a = _as_box(a)
        self.b = _as_box(b)
        self.c = _as_box(c)
        self.d = _as_box(d)
        self.certified_sl2 = certified_sl2
        self._det = None

    @classmethod
    def identity(cls, prec=None):
        one = ComplexBox.exact(1, 0, prec)
        zero = ComplexBox.exact(0, 0, prec)
        return cls(one, zero, zero, one, certified_sl2=True)

    @classmethod
    def from_rows(cls, rows, certified_sl2=False):
        (a, b), (c, d) = rows
        return cls(a, b, c, d, certified_sl2=certified_sl2)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return "IntervalMatrix2(%r, %r, %r, %r, certified_sl2=%r)" % (
            self.a, self.b, self.c, self.d, self.certified_sl2)

    def det(self):
        if self._det is None:
            self._det = self.a * self.d - self.b * self.c
        return self._det

    def trace(self):
        return self.a + self.d

    def __matmul__(self, other):
        if not isinstance(other, IntervalMatrix2):
            return NotImplemented
        return IntervalMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            certified_sl2=self.certified_sl2 and other.certified_sl2,
        )

    def sl2_inverse(self):
        """Adjugate inverse.  Valid only with an exact det = 1 certificate;
        interval evidence cannot supply one."""
        if not self.certified_sl2:
            raise NotCertifiedSL2("inverse requires a certified det = 1 matrix")
        return IntervalMatrix2(self.d, -self.b, -self.c, self.a, certified_sl2=True)

    def sub_identity(self):
        one = ComplexBox.exact(1)
        return IntervalMatrix2(self.a - one, self.b, self.c, self.d - one)

    def __neg__(self):
        return IntervalMatrix2(-self.a, -self.b, -self.c, -self.d,
                               certified_sl2=self.certified_sl2)

    def __add__(self, other):
        if not isinstance(other, IntervalMatrix2):
            return NotImplemented
        return IntervalMatrix2(self.a + other.a, self.b + other.b,
                               self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        if not isinstance(other, IntervalMatrix2):
            return NotImplemented
        return IntervalMatrix2(self.a - other.a, self.b - other.b,
                               self.c - other.c, self.d - other.d)

    def scaled_by(self, factor):
        """Entrywise product with a scalar box.  Drops the SL2 certificate."""
        return IntervalMatrix2(self.a * factor, self.b * factor,
                               self.c * factor, self.d * factor)

    def contains_matrix(self, entries) -> bool:
        """entries: four (re, im) exact pairs in row-major order."""
        for box, (re_q, im_q) in zip(self.entries, entries):
            if not box.contains(re_q, im_q):
                return False
        return True

    def contains_identity(self) -> bool:
        return self.contains_matrix(((1, 0), (0, 0), (0, 0), (1, 0)))

    def excludes_identity(self) -> bool:
        """Some entry provably differs from the identity's entry."""
        return not self.contains_identity()

    def diameter(self):
        return max(e.diameter() for e in self.entries)

    def widen_to_precision(self, bits):
        return IntervalMatrix2(
            self.a.widen_to_precision(bits), self.b.widen_to_precision(bits),
            self.c.widen_to_precision(bits), self.d.widen_to_precision(bits),
            certified_sl2=self.certified_sl2)

    def to_json(self):
        return [[self.a.to_json(), self.b.to_json()],
                [self.c.to_json(), self.d.to_json()]]

    @classmethod
    def from_json(cls, data, prec=None, certified_sl2=False):
        (a, b), (c, d) = data
        return cls(ComplexBox.from_json(a, prec), ComplexBox.from_json(b, prec),
                   ComplexBox.from_json(c, prec), ComplexBox.from_json(d, prec),
                   certified_sl2=certified_sl2)
