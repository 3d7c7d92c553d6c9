"""Tetrahedral triangulations: gluing data, orbits, links, and walks.

A triangulation is a list of tetrahedra with face gluings.  Face i of a
tetrahedron is the face opposite vertex i; a gluing at (tet, face) is a
target tetrahedron and a vertex permutation sending the face to the
matching face of the target.  Everything downstream (edge classes,
vertex links, quotient faces, cusp combinatorics) is derived here by
orbit computations so the rest of the package can stay combinatorial.
"""

from __future__ import annotations

import json

from .errors import (
    BadGluingData,
    EdgeReversedOntoItself,
    MissingPeripheralData,
    NonOrientable,
    NotClosedOrIdeal,
    ParseError,
)

# the six edges of a tetrahedron as ordered pairs i < j
EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {e: k for k, e in enumerate(EDGES)}
for _k, (_i, _j) in enumerate(EDGES):
    EDGE_INDEX[(_j, _i)] = _k

# faces of the tetrahedron containing a given edge: the two faces
# opposite the two vertices NOT on the edge
EDGE_COFACES = {e: tuple(v for v in range(4) if v not in e) for e in EDGES}


def perm_sign(p):
    sign = 1
    seen = [False] * 4
    for i in range(4):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perm_inverse(p):
    q = [0] * 4
    for i, v in enumerate(p):
        q[v] = i
    return tuple(q)


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]

    def classes(self):
        groups = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


class SignedUnionFind:
    """Union-find tracking a Z/2 sign of each element against its root."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n
        self.parity = [0] * n

    def find(self, x):
        if self.parent[x] == x:
            return x, 0
        path = []
        root = x
        while self.parent[root] != root:
            path.append(root)
            root = self.parent[root]
        p = 0
        for node in reversed(path):
            p ^= self.parity[node]
            self.parity[node] = p
            self.parent[node] = root
        return root, self.parity[x]

    def union(self, a, b, rel):
        """Declare sign(a) = sign(b) xor rel.  Returns False on conflict."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == rel
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
            pa, pb = pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ rel
        self.size[ra] += self.size[rb]
        return True


class EdgeClass:
    """One edge of the quotient complex.

    slots: list of (tet, (i, j)) with i < j, each with sign +-1 telling
    whether the (i, j) direction agrees with the class's reference
    direction.  A tetrahedron edge appears once even when the walk
    around the edge passes through it several times.
    """

    __slots__ = ("index", "slots", "rep")

    def __init__(self, index, slots, rep):
        self.index = index
        self.slots = slots
        self.rep = rep

    def __repr__(self):
        return "EdgeClass(%d, rep=%r, %d slots)" % (self.index, self.rep,
                                                    len(self.slots))


class Triangulation:
    def __init__(self, gluings, peripheral=None):
        self.n = len(gluings)
        if self.n == 0:
            raise BadGluingData("empty triangulation")
        self.gluings = []
        for t, row in enumerate(gluings):
            if len(row) != 4:
                raise BadGluingData("tet %d: need 4 face gluings" % t)
            cooked = []
            for f, item in enumerate(row):
                t2, p = item
                p = tuple(int(v) for v in p)
                if sorted(p) != [0, 1, 2, 3]:
                    raise BadGluingData("tet %d face %d: bad permutation %r"
                                        % (t, f, p))
                if not (0 <= t2 < self.n):
                    raise BadGluingData("tet %d face %d: target %d out of range"
                                        % (t, f, t2))
                cooked.append((int(t2), p))
            self.gluings.append(cooked)
        self._check_involution()
        self._edge_orbits()
        self._vertex_orbits()
        self._face_orbits()
        self._orientation_signs()
        self._side_orbits()
        self._vertex_links()
        self.peripheral = None
        if peripheral is not None:
            self.set_peripheral(peripheral)

    # ---- construction passes ----

    def _check_involution(self):
        for t in range(self.n):
            for f in range(4):
                t2, p = self.gluings[t][f]
                if t2 == t and p[f] == f:
                    raise BadGluingData(
                        "tet %d face %d glued to itself" % (t, f))
                back_t, back_p = self.gluings[t2][p[f]]
                if back_t != t or back_p != perm_inverse(p):
                    raise BadGluingData(
                        "gluing at tet %d face %d is not an involution" % (t, f))

    def _edge_orbits(self):
        n = self.n
        uf = SignedUnionFind(6 * n)
        for t in range(n):
            for f in range(4):
                t2, p = self.gluings[t][f]
                for (i, j) in EDGES:
                    if i == f or j == f:
                        continue
                    a, b = p[i], p[j]
                    rel = 0 if a < b else 1
                    sid1 = 6 * t + EDGE_INDEX[(i, j)]
                    sid2 = 6 * t2 + EDGE_INDEX[(a, b)]
                    if not uf.union(sid1, sid2, rel):
                        raise EdgeReversedOntoItself(
                            "edge {%d,%d} of tet %d" % (i, j, t))
        groups = {}
        for sid in range(6 * n):
            root, parity = uf.find(sid)
            groups.setdefault(root, []).append((sid, parity))
        self.edge_classes = []
        self.edge_class_of = {}
        self.edge_sign_of = {}
        for members in sorted(groups.values(), key=lambda g: g[0][0]):
            idx = len(self.edge_classes)
            slots = []
            rep = None
            members = sorted(members)
            # signs are reported relative to the representative slot's
            # direction, not the union-find root's internal reference
            rep_parity = members[0][1]
            for sid, parity in members:
                t, e = divmod(sid, 6)
                sign = 1 if parity == rep_parity else -1
                slots.append((t, EDGES[e], sign))
                self.edge_class_of[(t, EDGES[e])] = idx
                self.edge_sign_of[(t, EDGES[e])] = sign
                if rep is None:
                    rep = (t, EDGES[e])
            self.edge_classes.append(EdgeClass(idx, slots, rep))

    def _vertex_orbits(self):
        n = self.n
        uf = UnionFind(4 * n)
        for t in range(n):
            for f in range(4):
                t2, p = self.gluings[t][f]
                for v in range(4):
                    if v == f:
                        continue
                    uf.union(4 * t + v, 4 * t2 + p[v])
        self.vertex_class_of = {}
        self.vertex_classes = []
        for members in sorted(uf.classes(), key=min):
            idx = len(self.vertex_classes)
            cls = []
            for x in sorted(members):
                t, v = divmod(x, 4)
                self.vertex_class_of[(t, v)] = idx
                cls.append((t, v))
            self.vertex_classes.append(cls)

    def _face_orbits(self):
        self.face_classes = []
        self.face_class_of = {}
        for t in range(self.n):
            for f in range(4):
                if (t, f) in self.face_class_of:
                    continue
                t2, p = self.gluings[t][f]
                idx = len(self.face_classes)
                self.face_class_of[(t, f)] = idx
                self.face_class_of[(t2, p[f])] = idx
                self.face_classes.append(((t, f), (t2, p[f])))

    def _orientation_signs(self):
        signs = [0] * self.n
        for start in range(self.n):
            if signs[start]:
                continue
            signs[start] = 1
            stack = [start]
            while stack:
                t = stack.pop()
                for f in range(4):
                    t2, p = self.gluings[t][f]
                    want = signs[t] if perm_sign(p) < 0 else -signs[t]
                    if signs[t2] == 0:
                        signs[t2] = want
                        stack.append(t2)
                    elif signs[t2] != want:
                        raise NonOrientable(
                            "no consistent tetrahedron orientations exist")
        self.tet_signs = signs

    def _side_orbits(self):
        # sides of cusp triangles: (t, v, f) with v != f, glued across f
        self.side_classes = []
        self.side_class_of = {}
        for t in range(self.n):
            for v in range(4):
                for f in range(4):
                    if f == v or (t, v, f) in self.side_class_of:
                        continue
                    t2, p = self.gluings[t][f]
                    other = (t2, p[v], p[f])
                    idx = len(self.side_classes)
                    self.side_class_of[(t, v, f)] = idx
                    self.side_class_of[other] = idx
                    self.side_classes.append(((t, v, f), other))

    def _vertex_links(self):
        n = self.n
        # link vertices: ends of tetrahedron edges, indexed (t, v, u), u != v
        def tid(t, v, u):
            return 12 * t + 3 * v + (u if u < v else u - 1)

        uf = UnionFind(12 * n)
        for t in range(n):
            for f in range(4):
                t2, p = self.gluings[t][f]
                for v in range(4):
                    if v == f:
                        continue
                    for u in range(4):
                        if u in (v, f):
                            continue
                        uf.union(tid(t, v, u), tid(t2, p[v], p[u]))
        corner_count = [0] * len(self.vertex_classes)
        side_count = [0] * len(self.vertex_classes)
        linkv_count = [0] * len(self.vertex_classes)
        for t in range(n):
            for v in range(4):
                corner_count[self.vertex_class_of[(t, v)]] += 1
        for (t, v, f), _ in self.side_classes:
            side_count[self.vertex_class_of[(t, v)]] += 1
        seen = set()
        for t in range(n):
            for v in range(4):
                for u in range(4):
                    if u == v:
                        continue
                    root = uf.find(tid(t, v, u))
                    if root not in seen:
                        seen.add(root)
                        linkv_count[self.vertex_class_of[(t, v)]] += 1
        self.link_euler = [linkv_count[i] - side_count[i] + corner_count[i]
                           for i in range(len(self.vertex_classes))]
        if all(chi == 2 for chi in self.link_euler):
            self.kind = "closed"
        elif all(chi == 0 for chi in self.link_euler):
            self.kind = "ideal"
        else:
            raise NotClosedOrIdeal(
                "vertex link Euler characteristics %r" % (self.link_euler,))

    # ---- peripheral data ----

    def set_peripheral(self, data):
        if self.kind != "ideal":
            raise MissingPeripheralData(
                "peripheral curves only make sense on ideal triangulations")
        cooked = {}
        for name in ("meridian", "longitude"):
            if name not in data:
                raise MissingPeripheralData("missing %s weights" % name)
            W = data[name]
            if len(W) != self.n:
                raise ParseError("peripheral %s: wrong tetrahedron count" % name)
            W = [[[int(x) for x in row] for row in tet] for tet in W]
            for t in range(self.n):
                if len(W[t]) != 4 or any(len(r) != 4 for r in W[t]):
                    raise ParseError("peripheral %s: tet %d shape" % (name, t))
                for v in range(4):
                    if W[t][v][v] != 0:
                        raise ParseError(
                            "peripheral %s: tet %d vertex %d: diagonal weight"
                            % (name, t, v))
                    if sum(W[t][v]) != 0:
                        raise ParseError(
                            "peripheral %s: tet %d vertex %d: nonzero triangle sum"
                            % (name, t, v))
            for (t, v, f), (t2, v2, f2) in self.side_classes:
                if W[t][v][f] != -W[t2][v2][f2]:
                    raise ParseError(
                        "peripheral %s: weights at glued sides (%d,%d,%d)/"
                        "(%d,%d,%d) not opposite" % (name, t, v, f, t2, v2, f2))
            cooked[name] = W
        self.peripheral = cooked

    def peripheral_side_cycle(self, name):
        """The curve as a vector over side classes (representative weights)."""
        if self.peripheral is None:
            raise MissingPeripheralData("no peripheral curves on this triangulation")
        W = self.peripheral[name]
        return [W[t][v][f] for (t, v, f), _ in self.side_classes]

    def peripheral_face_cycle(self, name):
        """The curve as a vector over quotient faces of the dual spine."""
        if self.peripheral is None:
            raise MissingPeripheralData("no peripheral curves on this triangulation")
        W = self.peripheral[name]
        out = []
        for (t, f), _ in self.face_classes:
            out.append(sum(W[t][v][f] for v in range(4) if v != f))
        return out

    # ---- walks ----

    def walk_edge_class(self, idx):
        """Rotational walk around an edge class.

        Yields (tet, (a, b), f_in, f_out) per step; (a, b) carries the
        class reference direction, f_out is the face crossed to reach
        the next step.  The walk closes after one full turn; its length
        is the valence of the edge (with multiplicity).
        """
        t0, (i0, j0) = self.edge_classes[idx].rep
        f_in0 = EDGE_COFACES[(i0, j0)][0]
        state = (t0, i0, j0, f_in0)
        steps = 0
        limit = 60 * self.n + 100
        while True:
            t, a, b, f_in = state
            lo, hi = (a, b) if a < b else (b, a)
            c1, c2 = EDGE_COFACES[(lo, hi)]
            f_out = c2 if f_in == c1 else c1
            yield t, (a, b), f_in, f_out
            t2, p = self.gluings[t][f_out]
            state = (t2, p[a], p[b], p[f_out])
            steps += 1
            if state == (t0, i0, j0, f_in0):
                return
            if steps > limit:
                raise AssertionError("edge walk failed to close")

    def edge_valences(self):
        return [sum(1 for _ in self.walk_edge_class(i))
                for i in range(len(self.edge_classes))]

    # ---- serialization ----

    @classmethod
    def from_data(cls, data):
        if not isinstance(data, dict) or "gluings" not in data:
            raise ParseError("triangulation JSON needs a 'gluings' field")
        gluings = data["gluings"]
        if "tets" in data and int(data["tets"]) != len(gluings):
            raise ParseError("'tets' does not match the gluing table length")
        return cls(gluings, peripheral=data.get("peripheral"))

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError("bad triangulation JSON: %s" % exc) from None
        return cls.from_data(data)

    def to_data(self):
        out = {
            "tets": self.n,
            "gluings": [[[t2, list(p)] for (t2, p) in row] for row in self.gluings],
        }
        if self.peripheral is not None:
            out["peripheral"] = {name: self.peripheral[name]
                                 for name in ("meridian", "longitude")}
        return out

    def describe(self):
        return {
            "tets": self.n,
            "kind": self.kind,
            "edge_classes": len(self.edge_classes),
            "vertex_classes": len(self.vertex_classes),
            "faces": len(self.face_classes),
            "edge_valences": self.edge_valences(),
            "link_euler": self.link_euler,
        }
