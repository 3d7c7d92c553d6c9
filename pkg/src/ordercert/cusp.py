"""Integral homology of cusp cross-sections and of the ambient manifold.

The cusp cross-section of an ideal triangulation is tiled by link
triangles, one per (tetrahedron, ideal vertex) pair.  We work in the
dual cellulation: a dual vertex per triangle, a dual edge per glued
side pair (oriented representative slot -> partner slot), and a dual
face per corner orbit, where corners rotate around an edge class of the
triangulation.  Peripheral curves given as side crossing weights are
1-cycles of this complex, so membership and coordinate questions reduce
to integer linear algebra on its boundary matrices.

The manifold itself is handled through the dual spine: a vertex per
tetrahedron, an arc per quotient face, a 2-cell per edge class whose
boundary word is the rotational walk around the edge.  This computes
first homology of the manifold, enough to locate the slope that dies
rationally, the homological longitude.
"""

from __future__ import annotations

from math import gcd

from .errors import (
    InputError,
    MissingPeripheralData,
    NotRationalHomologySolidTorus,
)
from .zlattice import IntMatrix, hermite_normal_form, kernel_basis, solve_in_image


def _lattice_is_full(M):
    """Does the column lattice of M equal all of Z^rows?"""
    H, _ = hermite_normal_form(M)
    if M.rows > M.cols:
        return False
    for i in range(M.rows):
        for j in range(M.cols):
            want = 1 if i == j else 0
            if H.data[i][j] != want:
                return False
    return True


def _hnf_pivots(M):
    """Leading entries of the nonzero HNF columns."""
    H, _ = hermite_normal_form(M)
    pivots = []
    for j in range(H.cols):
        col = H.column(j)
        nz = [v for v in col if v != 0]
        if not nz:
            break
        pivots.append(nz[0])
    return pivots


class CuspComplex:
    """Dual cellulation of every cusp torus, with homology coordinates."""

    def __init__(self, tri):
        if tri.kind != "ideal":
            raise InputError("cusp cross-sections need an ideal triangulation")
        self.tri = tri
        self.cusp_count = len(tri.vertex_classes)
        # global side-class index -> cusp, and the cusp's local ordering
        self.cusp_of_side = []
        for (t, v, f), _ in tri.side_classes:
            self.cusp_of_side.append(tri.vertex_class_of[(t, v)])
        self.sides_of_cusp = [[] for _ in range(self.cusp_count)]
        for s, c in enumerate(self.cusp_of_side):
            self.sides_of_cusp[c].append(s)
        self._build_local()

    def _build_local(self):
        tri = self.tri
        n_sides = len(tri.side_classes)
        # boundary of a dual edge: partner triangle minus representative
        d1_cols = []
        for (t, v, f), (t2, v2, f2) in tri.side_classes:
            d1_cols.append(((t, v), (t2, v2)))
        # dual faces: two corner orbits per edge class, one per end
        d2_cols = [[0] * n_sides for _ in range(2 * len(tri.edge_classes))]
        orbit_cusp = [None] * (2 * len(tri.edge_classes))
        for idx in range(len(tri.edge_classes)):
            steps = list(tri.walk_edge_class(idx))
            for end in (0, 1):
                col = d2_cols[2 * idx + end]
                for (t, (a, b), f_in, f_out) in steps:
                    v = a if end == 0 else b
                    slot = (t, v, f_out)
                    s = tri.side_class_of[slot]
                    rep = tri.side_classes[s][0]
                    col[s] += 1 if slot == rep else -1
                t0, (a0, b0), _, _ = steps[0]
                v0 = a0 if end == 0 else b0
                orbit_cusp[2 * idx + end] = tri.vertex_class_of[(t0, v0)]

        self._local = []
        for c in range(self.cusp_count):
            sides = self.sides_of_cusp[c]
            local_of = {s: i for i, s in enumerate(sides)}
            triangles = tri.vertex_classes[c]
            tindex = {tv: i for i, tv in enumerate(triangles)}
            d1 = IntMatrix.zero(len(triangles), len(sides))
            for i, s in enumerate(sides):
                src, dst = d1_cols[s]
                d1.data[tindex[dst]][i] += 1
                d1.data[tindex[src]][i] -= 1
            K = IntMatrix.from_columns(
                kernel_basis(d1), len(sides)) if sides else IntMatrix.zero(0, 0)
            cvecs = []
            for o in range(2 * len(tri.edge_classes)):
                if orbit_cusp[o] != c:
                    continue
                local = [d2_cols[o][s] for s in sides]
                y = solve_in_image(K, local)
                if y is None:
                    raise AssertionError("corner orbit boundary is not a cycle")
                cvecs.append(y)
            C = IntMatrix.from_columns(cvecs, K.cols)
            rank_c = len(_hnf_pivots(C))
            if K.cols - rank_c != 2:
                raise AssertionError(
                    "cusp %d cross-section is not a torus" % c)
            self._local.append({"sides": sides, "local_of": local_of,
                                "K": K, "C": C})

    def restrict_weights(self, c, weights):
        """Global side-class weight vector restricted to cusp c."""
        return [weights[s] for s in self._local[c]["sides"]]

    def cycle_coords(self, c, weights):
        """Coordinates of a cycle in the cusp's cycle lattice basis."""
        loc = self._local[c]
        y = solve_in_image(loc["K"], self.restrict_weights(c, weights))
        if y is None:
            raise AssertionError("weight vector is not a 1-cycle on cusp %d" % c)
        return y

    def weights_from_coords(self, c, y):
        """Global side-class weight vector realizing the coordinates y."""
        loc = self._local[c]
        local = loc["K"].mul_vector(y)
        out = [0] * len(self.tri.side_classes)
        for i, s in enumerate(loc["sides"]):
            out[s] = local[i]
        return out

    def is_basis(self, c, y_m, y_l):
        """Do two cycle classes generate the cusp torus homology?"""
        loc = self._local[c]
        cols = [y_m, y_l] + [loc["C"].column(j) for j in range(loc["C"].cols)]
        return _lattice_is_full(IntMatrix.from_columns(cols, loc["K"].cols))

    def coords_in_basis(self, c, y_m, y_l, y):
        """(p, q) with y = p*y_m + q*y_l in the cusp homology."""
        loc = self._local[c]
        cols = [y_m, y_l] + [loc["C"].column(j) for j in range(loc["C"].cols)]
        sol = solve_in_image(IntMatrix.from_columns(cols, loc["K"].cols), y)
        if sol is None:
            raise AssertionError("class does not lie in the cusp homology lattice")
        return sol[0], sol[1]

    def is_trivial(self, c, y):
        """Is the class of y zero in the cusp homology?"""
        loc = self._local[c]
        return solve_in_image(loc["C"], y) is not None

    def peripheral_coords(self):
        """Cycle coordinates of the declared meridian and longitude per cusp.

        Raises InputError when the two curves fail to form a homology
        basis on some cusp.
        """
        tri = self.tri
        if tri.peripheral is None:
            raise MissingPeripheralData("triangulation has no peripheral curves")
        wm = tri.peripheral_side_cycle("meridian")
        wl = tri.peripheral_side_cycle("longitude")
        out = []
        for c in range(self.cusp_count):
            y_m = self.cycle_coords(c, wm)
            y_l = self.cycle_coords(c, wl)
            if not self.is_basis(c, y_m, y_l):
                raise InputError(
                    "meridian and longitude are not a homology basis on cusp %d"
                    % c)
            out.append((y_m, y_l))
        return out


class SpineHomology:
    """First homology of the manifold from the dual spine."""

    def __init__(self, tri):
        self.tri = tri
        gens = len(tri.face_classes)
        d1 = IntMatrix.zero(tri.n, gens)
        for g, ((t, f), (t2, f2)) in enumerate(tri.face_classes):
            d1.data[t2][g] += 1
            d1.data[t][g] -= 1
        self.K = IntMatrix.from_columns(kernel_basis(d1), gens)
        cvecs = []
        for idx in range(len(tri.edge_classes)):
            col = [0] * gens
            for (t, _, _, f_out) in tri.walk_edge_class(idx):
                g = tri.face_class_of[(t, f_out)]
                rep = tri.face_classes[g][0]
                col[g] += 1 if (t, f_out) == rep else -1
            y = solve_in_image(self.K, col)
            if y is None:
                raise AssertionError("edge walk boundary is not a cycle")
            cvecs.append(y)
        self.C = IntMatrix.from_columns(cvecs, self.K.cols)
        pivots = _hnf_pivots(self.C)
        self.free_rank = self.K.cols - len(pivots)
        self.torsion_order = 1
        for p in pivots:
            self.torsion_order *= p

    def cycle_coords(self, face_weights):
        y = solve_in_image(self.K, face_weights)
        if y is None:
            raise AssertionError("face weight vector is not a 1-cycle")
        return y

    def free_functionals(self):
        """Integer functionals spanning Hom(H1, Z), as rows over cycle coords."""
        return kernel_basis(self.C.transpose())


def homological_longitude(tri):
    """The primitive boundary slope that is torsion in the manifold.

    Returns integers (p, q) meaning p * meridian + q * longitude, with
    sign fixed by p > 0, or p == 0 and q > 0.  The triangulation must be
    a one-cusped rational homology solid torus with peripheral curves.
    """
    if tri.kind != "ideal" or len(tri.vertex_classes) != 1:
        raise NotRationalHomologySolidTorus(
            "need a one-cusped ideal triangulation")
    if tri.peripheral is None:
        raise MissingPeripheralData("triangulation has no peripheral curves")
    cusp = CuspComplex(tri)
    cusp.peripheral_coords()
    spine = SpineHomology(tri)
    if spine.free_rank != 1:
        raise NotRationalHomologySolidTorus(
            "first Betti number is %d, not 1" % spine.free_rank)
    v = spine.free_functionals()[0]
    y_m = spine.cycle_coords(tri.peripheral_face_cycle("meridian"))
    y_l = spine.cycle_coords(tri.peripheral_face_cycle("longitude"))
    n_m = sum(a * b for a, b in zip(v, y_m))
    n_l = sum(a * b for a, b in zip(v, y_l))
    if n_m == 0 and n_l == 0:
        raise AssertionError("peripheral basis maps to torsion, impossible")
    g = gcd(n_m, n_l)
    p, q = n_l // g, -n_m // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return p, q
