"""Thurston gluing and cusp equations over a one-cusped ideal triangulation.

Each tetrahedron corner carries one of three shape parameters z,
z' = 1/(1-z), z'' = 1 - 1/z, assigned by the opposite-edge pair of the
corner's edge.  An equation is stored as integer exponent vectors over
log z_i and log(1-z_i) plus an integer multiple of pi*i, using
log z' = -log(1-z) and log z'' = log(1-z) - log z + pi*i on principal
branches.  The system holds one equation per edge class plus a single
cusp equation: the unfilled meridian with target 0, or a filling
equation with target 2*pi*i.  Certification uses the square subsystem
that drops the last edge equation; the dropped equation stays available
as a residual check.
"""

from __future__ import annotations

from math import gcd

from . import elementary as el
from .errors import (InputError, MissingPeripheralData, NotIdealTriangulation)
from .intervals import ComplexBox, RealInterval

# corner parameter kind by the edge's sorted vertex pair
_KIND = {(0, 1): 0, (2, 3): 0,
         (0, 2): 1, (1, 3): 1,
         (0, 3): 2, (1, 2): 2}


class Slope:
    """Primitive peripheral curve class (p, q), meridian then longitude."""

    __slots__ = ("p", "q")

    def __init__(self, p, q, primitive=True):
        self.p = int(p)
        self.q = int(q)
        if (self.p, self.q) == (0, 0):
            raise InputError("slope (0, 0) is not a curve")
        if primitive and gcd(self.p, self.q) != 1:
            raise InputError("slope %r is not primitive" % ((p, q),))

    def __iter__(self):
        return iter((self.p, self.q))

    def __eq__(self, other):
        if isinstance(other, Slope):
            other = (other.p, other.q)
        return (self.p, self.q) == tuple(other)

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return "Slope(%d, %d)" % (self.p, self.q)


class Equation:
    """a . log z + b . log(1-z) = c * pi * i, exponents all integers."""

    __slots__ = ("a", "b", "c", "label")

    def __init__(self, a, b, c, label):
        self.a = tuple(int(x) for x in a)
        self.b = tuple(int(x) for x in b)
        self.c = int(c)
        self.label = label

    def __repr__(self):
        return "Equation(%r, %r, %d pi i, %s)" % (self.a, self.b, self.c,
                                                  self.label)


class GluingSystem:
    """Edge equations plus one cusp or filling equation.

    form "logarithmic" evaluates over complex boxes; "rectangular"
    evaluates the exponentiated real form with targets (-1)^c.
    """

    __slots__ = ("n", "equations", "form")

    def __init__(self, n, equations, form):
        if form not in ("logarithmic", "rectangular"):
            raise InputError("unknown system form %r" % (form,))
        self.n = n
        self.equations = list(equations)
        self.form = form

    @property
    def edge_equations(self):
        return [e for e in self.equations if e.label == "edge"]

    @property
    def final_equation(self):
        return self.equations[-1]

    def square_equations(self):
        """The n equations certification solves: all but the last edge
        equation, then the cusp or filling equation."""
        edges = self.edge_equations
        return edges[:-1] + [self.final_equation]

    # ---- logarithmic evaluation over complex boxes ----

    def _log_parts(self, zs, bits):
        logs = []
        logs1 = []
        for z in zs:
            logs.append(el.complex_log(z, bits))
            logs1.append(el.complex_log(1 - z, bits))
        return logs, logs1

    def residuals(self, zs, bits, equations=None):
        """Interval evaluation of lhs - rhs for each equation."""
        if self.form != "logarithmic":
            raise InputError("log-form residuals on a rectangular system")
        eqs = self.equations if equations is None else equations
        logs, logs1 = self._log_parts(zs, bits)
        pii = ComplexBox(RealInterval.exact(0), el.pi_interval(bits))
        out = []
        for eq in eqs:
            total = ComplexBox.exact(0, 0)
            for j in range(self.n):
                if eq.a[j]:
                    total = total + logs[j].scale(eq.a[j])
                if eq.b[j]:
                    total = total + logs1[j].scale(eq.b[j])
            out.append(total - pii.scale(eq.c))
        return out

    def jacobian(self, zs, bits, equations=None):
        """Rows of d(residual)/dz_j as complex boxes."""
        if self.form != "logarithmic":
            raise InputError("log-form jacobian on a rectangular system")
        eqs = self.equations if equations is None else equations
        inv_z = [z.recip() for z in zs]
        inv_w = [(1 - z).recip() for z in zs]
        rows = []
        for eq in eqs:
            row = []
            for j in range(self.n):
                entry = ComplexBox.exact(0, 0)
                if eq.a[j]:
                    entry = entry + inv_z[j].scale(eq.a[j])
                if eq.b[j]:
                    entry = entry - inv_w[j].scale(eq.b[j])
                row.append(entry)
            rows.append(row)
        return rows

    # ---- rectangular evaluation over real intervals ----

    def _power_product(self, xs, eq):
        total = RealInterval.exact(1)
        for j, x in enumerate(xs):
            if eq.a[j]:
                total = total * _int_power(x, eq.a[j])
            if eq.b[j]:
                total = total * _int_power(1 - x, eq.b[j])
        return total

    def real_residuals(self, xs, bits, equations=None):
        """prod z^a (1-z)^b - (-1)^c for each equation, over reals."""
        if self.form != "rectangular":
            raise InputError("rectangular residuals on a log-form system")
        eqs = self.equations if equations is None else equations
        out = []
        for eq in eqs:
            target = 1 if eq.c % 2 == 0 else -1
            out.append(self._power_product(xs, eq) - target)
        return out

    def real_jacobian(self, xs, bits, equations=None):
        if self.form != "rectangular":
            raise InputError("rectangular jacobian on a log-form system")
        eqs = self.equations if equations is None else equations
        rows = []
        for eq in eqs:
            prod = self._power_product(xs, eq)
            row = []
            for j, x in enumerate(xs):
                factor = RealInterval.exact(0)
                if eq.a[j]:
                    factor = factor + x.recip().scale(eq.a[j])
                if eq.b[j]:
                    factor = factor - (1 - x).recip().scale(eq.b[j])
                row.append(prod * factor)
            rows.append(row)
        return rows


def _int_power(x, k):
    if k < 0:
        return _int_power(x.recip(), -k)
    out = RealInterval.exact(1)
    base = x
    while k:
        if k & 1:
            out = out * base
        base = base.sq()
        k >>= 1
    return out


def _corner_weights(tri, W):
    """Net corner weight of a peripheral curve at each (tet, edge).

    A curve crossing the three sides of a cusp triangle with net inward
    counts x decomposes into corner arcs, the arc at the corner opposite
    a side receiving minus that side's inward count; with the stored
    side-crossing signs this is exactly W[t][v][u] at the corner of
    triangle (t, v) along the edge (v, u).  The two triangles at the
    ends of an edge both contribute.
    """
    weights = {}
    for t in range(tri.n):
        for (i, j) in _KIND:
            weights[(t, (i, j))] = W[t][i][j] + W[t][j][i]
    return weights


def build_gluing_system(tri, filling=None, form="logarithmic"):
    """Edge equations plus the cusp equation (filling=None, target 0)
    or the filling equation p*meridian + q*longitude = 2*pi*i."""
    if tri.kind != "ideal":
        raise NotIdealTriangulation(
            "gluing equations need an ideal triangulation, got %s" % tri.kind)
    if len(tri.vertex_classes) != 1:
        raise NotIdealTriangulation(
            "gluing equations here support exactly one cusp, got %d"
            % len(tri.vertex_classes))
    if tri.peripheral is None:
        raise MissingPeripheralData(
            "cusp equation needs peripheral curve weights")
    n = tri.n

    def accumulate(contribs, base_target, label):
        a = [0] * n
        b = [0] * n
        c = base_target
        for (t, e), w in contribs:
            kind = _KIND[tuple(sorted(e))]
            if kind == 0:
                a[t] += w
            elif kind == 1:
                b[t] -= w
            else:
                a[t] -= w
                b[t] += w
                c -= w
        return Equation(a, b, c, label)

    equations = []
    for cls in tri.edge_classes:
        contribs = [((t, e), 1) for (t, e, _) in cls.slots]
        equations.append(accumulate(contribs, 2, "edge"))

    mer = _corner_weights(tri, tri.peripheral["meridian"])
    lon = _corner_weights(tri, tri.peripheral["longitude"])
    if filling is None:
        contribs = [(k, w) for k, w in mer.items() if w]
        equations.append(accumulate(contribs, 0, "cusp"))
    else:
        p, q = Slope(*filling) if not isinstance(filling, Slope) else filling
        combined = {k: p * mer[k] + q * lon[k] for k in mer}
        contribs = [(k, w) for k, w in combined.items() if w]
        equations.append(accumulate(contribs, 2, "filling"))
    return GluingSystem(n, equations, form)


def peripheral_log_holonomy(tri, slope, zs, bits):
    """Interval log-holonomy of p*meridian + q*longitude at shapes zs."""
    if tri.peripheral is None:
        raise MissingPeripheralData("no peripheral curves on this triangulation")
    p, q = slope
    mer = _corner_weights(tri, tri.peripheral["meridian"])
    lon = _corner_weights(tri, tri.peripheral["longitude"])
    logs = [el.complex_log(z, bits) for z in zs]
    logs1 = [el.complex_log(1 - z, bits) for z in zs]
    pii = ComplexBox(RealInterval.exact(0), el.pi_interval(bits))
    total = ComplexBox.exact(0, 0)
    for (t, e), wm in mer.items():
        w = p * wm + q * lon[(t, e)]
        if not w:
            continue
        kind = _KIND[tuple(sorted(e))]
        if kind == 0:
            term = logs[t]
        elif kind == 1:
            term = -logs1[t]
        else:
            term = logs1[t] - logs[t] + pii
        total = total + term.scale(w)
    return total
