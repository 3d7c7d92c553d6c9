"""Certified shape solutions for gluing systems via the Krawczyk test.

Approximate shapes from any outside solver are polished with a
midpoint Newton iteration, inflated to a candidate box, and certified
by checking the Krawczyk inclusion K(X) strictly inside X, where

    K(X) = m - Y f(m) + (I - Y J(X)) (X - m)

with m the box midpoint and Y an interval enclosure of the inverse
midpoint Jacobian.  Success proves existence of a solution in X; the
box is then tightened by intersecting with K(X) until the diameter
stabilizes.  The same machinery runs over complex boxes for the
logarithmic form and over real intervals for the rectangular form.
"""

from __future__ import annotations

from . import dyadic
from .dyadic import rational
from .errors import (DivisorContainsZero, DomainViolation,
                     HyperbolicityWitnessFailed, InputError, NoContraction,
                     NonPositiveImaginaryPart, DegenerateShape,
                     SingularIntervalJacobian)
from .intervals import ComplexBox, RealInterval

_POLISH_ROUNDS = 60
_REFINE_ROUNDS = 50
_INFLATE_SHIFTS = (12, 20, 28, 36)


class ShapeBox:
    """One interval enclosure per tetrahedron shape."""

    __slots__ = ("boxes", "real")

    def __init__(self, boxes, real=False):
        self.boxes = list(boxes)
        if not self.boxes:
            raise InputError("shape box needs at least one coordinate")
        want = RealInterval if real else ComplexBox
        for b in self.boxes:
            if not isinstance(b, want):
                raise InputError("expected %s coordinates, got %r"
                                 % (want.__name__, type(b).__name__))
        self.real = real

    def __len__(self):
        return len(self.boxes)

    def __iter__(self):
        return iter(self.boxes)

    def __getitem__(self, i):
        return self.boxes[i]

    def diameter(self):
        return max(b.diameter() for b in self.boxes)

    def midpoints(self):
        return [b.midpoint() for b in self.boxes]

    def to_json(self):
        return {"real": self.real,
                "boxes": [b.to_json() for b in self.boxes]}

    @classmethod
    def from_json(cls, data, prec=None):
        real = bool(data["real"])
        kind = RealInterval if real else ComplexBox
        return cls([kind.from_json(b, prec) for b in data["boxes"]],
                   real=real)

    def __repr__(self):
        return "ShapeBox(%d %s)" % (len(self.boxes),
                                    "real" if self.real else "complex")


class CertifiedStructure:
    """A Krawczyk-certified shape solution tagged hyperbolic."""

    __slots__ = ("shapes", "precision")
    kind = "hyperbolic"

    def __init__(self, shapes, precision):
        self.shapes = shapes
        self.precision = precision

    def to_json(self):
        return {"kind": self.kind, "precision": self.precision,
                "shapes": self.shapes.to_json()}


class CertifiedRealStructure:
    """A certified real shape solution with its hyperbolicity witness."""

    __slots__ = ("shapes", "precision", "witness", "trace_sq")
    kind = "real-certified"

    def __init__(self, shapes, precision, witness, trace_sq):
        self.shapes = shapes
        self.precision = precision
        self.witness = witness
        self.trace_sq = trace_sq

    def to_json(self):
        return {"kind": self.kind, "precision": self.precision,
                "witness": [self.witness.p, self.witness.q],
                "trace_sq": self.trace_sq.to_json(),
                "shapes": self.shapes.to_json()}


# ---- scalar-mode shims shared by the complex and real paths ----

class _ComplexScalars:
    real = False

    @staticmethod
    def to_exact(value):
        if isinstance(value, ComplexBox):
            return value.midpoint()
        if isinstance(value, complex):
            return (_exact_part(value.real), _exact_part(value.imag))
        if isinstance(value, dict):
            return (_exact_part(value["re"]), _exact_part(value.get("im", 0)))
        if isinstance(value, (tuple, list)) and len(value) == 2:
            return (_exact_part(value[0]), _exact_part(value[1]))
        return (_exact_part(value), rational(0))

    @staticmethod
    def point(pair, prec):
        return ComplexBox.exact(pair[0], pair[1], prec)

    @staticmethod
    def box_mid(box):
        return box.midpoint()

    @staticmethod
    def sub(a, b):
        return (a[0] - b[0], a[1] - b[1])

    @staticmethod
    def norm(pair):
        return abs(pair[0]) + abs(pair[1])

    @staticmethod
    def inflate(pair, radius, prec):
        return ComplexBox(RealInterval(pair[0] - radius, pair[0] + radius, prec),
                          RealInterval(pair[1] - radius, pair[1] + radius, prec))

    @staticmethod
    def pivot_size(entry):
        return entry.modulus_sq().lo

    @staticmethod
    def nonsingular(entry):
        return entry.excludes_zero()

    @staticmethod
    def const(k, prec):
        return ComplexBox.exact(k, 0, prec)

    @staticmethod
    def residuals(system, xs, bits, equations):
        return system.residuals(xs, bits, equations=equations)

    @staticmethod
    def jacobian(system, xs, bits, equations):
        return system.jacobian(xs, bits, equations=equations)


class _RealScalars:
    real = True

    @staticmethod
    def to_exact(value):
        if isinstance(value, RealInterval):
            return value.midpoint()
        if isinstance(value, (tuple, list)) and len(value) == 2:
            im = _exact_part(value[1])
            if im:
                raise InputError("real certification got a complex seed")
            return _exact_part(value[0])
        if isinstance(value, dict):
            return _exact_part(value["re"])
        return _exact_part(value)

    @staticmethod
    def point(q, prec):
        return RealInterval.exact(q, prec)

    @staticmethod
    def box_mid(box):
        return box.midpoint()

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def norm(q):
        return abs(q)

    @staticmethod
    def inflate(q, radius, prec):
        return RealInterval(q - radius, q + radius, prec)

    @staticmethod
    def pivot_size(entry):
        return entry.min_abs()

    @staticmethod
    def nonsingular(entry):
        return entry.sign_definite()

    @staticmethod
    def const(k, prec):
        return RealInterval.exact(k, prec)

    @staticmethod
    def residuals(system, xs, bits, equations):
        return system.real_residuals(xs, bits, equations=equations)

    @staticmethod
    def jacobian(system, xs, bits, equations):
        return system.real_jacobian(xs, bits, equations=equations)


def _exact_part(x):
    if dyadic.is_rational(x):
        return x
    if isinstance(x, int):
        return rational(x)
    if isinstance(x, float):
        return rational(*x.as_integer_ratio())
    if isinstance(x, str):
        return dyadic.parse_decimal(x)
    raise InputError("cannot read %r as an exact number" % (x,))


def _mode_for(system):
    return _RealScalars if system.form == "rectangular" else _ComplexScalars


# ---- interval linear algebra ----

def _interval_inverse(M, mode, prec):
    """Gauss-Jordan inverse with pivoting by enclosure size.

    Raises SingularIntervalJacobian when no usable pivot excludes zero.
    """
    n = len(M)
    A = [list(row) + [mode.const(1 if i == j else 0, prec)
                      for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        best = None
        best_size = None
        for r in range(col, n):
            size = mode.pivot_size(A[r][col])
            if best is None or size > best_size:
                best, best_size = r, size
        if not mode.nonsingular(A[best][col]):
            raise SingularIntervalJacobian(
                "no pivot excluding zero in column %d" % col)
        A[col], A[best] = A[best], A[col]
        inv = A[col][col].recip()
        A[col] = [entry * inv for entry in A[col]]
        for r in range(n):
            if r == col:
                continue
            factor = A[r][col]
            A[r] = [A[r][j] - factor * A[col][j] for j in range(2 * n)]
    return [row[n:] for row in A]


def _mat_vec(M, v):
    out = []
    for row in M:
        total = row[0] * v[0]
        for entry, x in zip(row[1:], v[1:]):
            total = total + entry * x
        out.append(total)
    return out


def _eye_minus_product(Y, J, mode, prec):
    n = len(Y)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            total = Y[i][0] * J[0][j]
            for k in range(1, n):
                total = total + Y[i][k] * J[k][j]
            delta = mode.const(1 if i == j else 0, prec)
            row.append(delta - total)
        out.append(row)
    return out


# ---- the certification pipeline ----

def _polish(system, equations, mode, mids, bits):
    """Newton-iterate exact midpoints toward the root.

    Early iterations run at low precision and the ladder doubles each
    round; Newton roughly doubles correct digits per step, so precision
    beyond the current accuracy is wasted.  Stops once a full-precision
    step lands within the smallest inflation radius.
    """
    tol = rational(1 << 8, 1 << bits)
    prec = 64
    for _ in range(_POLISH_ROUNDS):
        here = min(bits, prec)
        xs = [mode.point(m, here) for m in mids]
        F = mode.residuals(system, xs, here, equations)
        J = mode.jacobian(system, xs, here, equations)
        Y = _interval_inverse(J, mode, here)
        delta = _mat_vec(Y, F)
        step = rational(0)
        nxt = []
        for m, d in zip(mids, delta):
            dm = mode.box_mid(d)
            nxt.append(mode.sub(m, dm))
            size = mode.norm(dm)
            if size > step:
                step = size
        mids = nxt
        if here == bits and step < tol:
            break
        prec *= 2
    return mids


def _krawczyk_image(system, equations, mode, X, bits):
    """One Krawczyk evaluation; (strict inclusion held, refined box)."""
    mids = [mode.box_mid(x) for x in X]
    points = [mode.point(m, bits) for m in mids]
    F = mode.residuals(system, points, bits, equations)
    Jmid = mode.jacobian(system, points, bits, equations)
    Y = _interval_inverse(Jmid, mode, bits)
    JX = mode.jacobian(system, X, bits, equations)
    E = _eye_minus_product(Y, JX, mode, bits)
    offset = _mat_vec(Y, F)
    spread = _mat_vec(E, [x - p for x, p in zip(X, points)])
    K = [p - o + s for p, o, s in zip(points, offset, spread)]
    ok = all(x.strictly_contains(k) for x, k in zip(X, K))
    refined = []
    for x, k in zip(X, K):
        meet = x.intersect(k)
        if meet is None:
            return False, None
        refined.append(meet)
    return ok, refined


def _refine(system, equations, mode, X, bits):
    diam = max(x.diameter() for x in X)
    for _ in range(_REFINE_ROUNDS):
        ok, nxt = _krawczyk_image(system, equations, mode, X, bits)
        if not ok or nxt is None:
            break
        X = nxt
        new_diam = max(x.diameter() for x in X)
        if new_diam * 4 > diam * 3:
            diam = new_diam
            break
        diam = new_diam
    return X


def krawczyk_certify(system, initial, precision):
    """Certify a shape solution of the system's square subsystem.

    initial may be approximate numbers (one per tetrahedron, any mix of
    complex, float, (re, im) pairs, or decimal strings) or a ShapeBox
    from an earlier run.  Returns a ShapeBox whose coordinates provably
    contain a solution.
    """
    bits = int(precision)
    if bits < 30:
        raise InputError("certification below 30 bits is meaningless")
    mode = _mode_for(system)
    equations = system.square_equations()
    if len(equations) != system.n:
        raise InputError("square subsystem has %d equations for %d variables"
                         % (len(equations), system.n))

    seed_boxes = None
    if isinstance(initial, ShapeBox):
        if initial.real != mode.real:
            raise InputError("shape box kind does not match the system form")
        seed_boxes = [b.widen_to_precision(bits) for b in initial.boxes]
        values = initial.boxes
    else:
        values = list(initial)
    if len(values) != system.n:
        raise InputError("expected %d initial shapes, got %d"
                         % (system.n, len(values)))
    mids = [mode.to_exact(v) for v in values]

    try:
        if seed_boxes is not None:
            ok, refined = _krawczyk_image(system, equations, mode,
                                          seed_boxes, bits)
            if ok:
                return ShapeBox(_refine(system, equations, mode, refined,
                                        bits), real=mode.real)
        mids = _polish(system, equations, mode, mids, bits)
        for shift in _INFLATE_SHIFTS:
            radius = rational(1, 1 << bits) * (1 << shift)
            X = [mode.inflate(m, radius, bits) for m in mids]
            ok, refined = _krawczyk_image(system, equations, mode, X, bits)
            if ok:
                return ShapeBox(_refine(system, equations, mode, refined,
                                        bits), real=mode.real)
    except (DomainViolation, DivisorContainsZero) as err:
        raise NoContraction(
            "iteration left the domain of the equations: %s" % (err,))
    raise NoContraction(
        "Krawczyk inclusion failed at every inflation radius")


def _check_residuals(system, shapes, bits):
    mode = _mode_for(system)
    res = mode.residuals(system, shapes.boxes, bits, system.equations)
    for eq, r in zip(system.equations, res):
        holds = r.contains(0, 0) if not mode.real else r.contains(0)
        if not holds:
            raise NoContraction(
                "certified box misses the %s equation target" % eq.label)


def certify_hyperbolic_structure(system, box, precision=None):
    """Tag a certified complex solution as a hyperbolic structure.

    Every coordinate must have strictly positive imaginary part, and
    every stored equation (the redundant edge equation included) must
    have a residual containing its target.
    """
    if system.form != "logarithmic" or box.real:
        raise InputError("hyperbolic certification needs the logarithmic form")
    bits = precision if precision is not None else _box_precision(box)
    for i, b in enumerate(box.boxes):
        if not b.im.lo > 0:
            raise NonPositiveImaginaryPart(i)
    _check_residuals(system, box, bits)
    return CertifiedStructure(box, bits)


def certify_real_structure(system, box, witness, holonomy_trace_sq,
                           precision=None):
    """Certify a real rectangular solution with a hyperbolicity witness.

    holonomy_trace_sq(shapes, slope) must return an interval enclosing
    the squared trace of the witness slope's holonomy; a value provably
    above 4 rules out the degenerate interpretations of a real solution.
    """
    if system.form != "rectangular":
        raise InputError("real certification needs the rectangular form")
    bits = precision if precision is not None else _box_precision(box)
    certified = krawczyk_certify(system, box, bits)
    for i, b in enumerate(certified.boxes):
        if not (b.excludes(0) and b.excludes(1)):
            raise DegenerateShape(
                "real shape %d cannot exclude the degenerate values 0, 1"
                % i)
    _check_residuals(system, certified, bits)
    tr2 = holonomy_trace_sq(certified, witness)
    if not tr2.lo > 4:
        raise HyperbolicityWitnessFailed(
            "witness trace square %r not provably above 4" % (tr2,))
    return CertifiedRealStructure(certified, bits, witness, tr2)


def _box_precision(box):
    precs = [b.prec for b in box.boxes]
    known = [p for p in precs if p is not None]
    if not known:
        raise InputError("shape box carries no working precision")
    return min(known)
