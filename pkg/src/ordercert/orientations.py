"""Acyclic edge orientations of triangulations and the foliar tests.

An edge orientation assigns a direction to every edge class, recorded
as a bit against the class's reference direction (the representative
slot read low vertex to high).  An orientation is acyclic when no face
of any tetrahedron has its three edges directed in a cycle; each
acyclically oriented tetrahedron then orders its four vertices, and
every edge slot picks up a role from the induced positions.  The roles
drive everything else: sink detection, the face relation generated by
compatibly short edges, the foliar verdicts, and the Euler cochain.
"""

from __future__ import annotations

from .errors import InputError, InvalidSite, NotAcyclic
from .triangulation import EDGE_COFACES, EDGES, Triangulation, perm_inverse

ROLE_VERY_LONG = "very-long"
ROLE_MIXED = "mixed"
ROLE_SHORT_BOTTOM = "compatibly-short-bottom"
ROLE_SHORT_TOP = "compatibly-short-top"
ROLE_SHORT_INCOMPAT = "incompatibly-short"

_ROLE_BY_POSITIONS = {
    (0, 3): ROLE_VERY_LONG,
    (0, 2): ROLE_MIXED,
    (1, 3): ROLE_MIXED,
    (0, 1): ROLE_SHORT_BOTTOM,
    (2, 3): ROLE_SHORT_TOP,
    (1, 2): ROLE_SHORT_INCOMPAT,
}


class EdgeOrientation:
    """Direction bits per edge class; bit 0 keeps the reference direction."""

    __slots__ = ("bits",)

    def __init__(self, bits):
        self.bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in self.bits):
            raise InputError("orientation bits must be 0 or 1")

    def __eq__(self, other):
        return isinstance(other, EdgeOrientation) and self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return "EdgeOrientation(%r)" % (self.bits,)

    def flipped(self):
        return EdgeOrientation(tuple(1 - b for b in self.bits))

    def directions(self):
        """Directions as +-1 against the reference, for serialization."""
        return [1 if b == 0 else -1 for b in self.bits]

    @classmethod
    def from_directions(cls, dirs):
        bits = []
        for d in dirs:
            if d == 1:
                bits.append(0)
            elif d == -1:
                bits.append(1)
            else:
                raise InputError("directions must be +1 or -1, got %r" % (d,))
        return cls(bits)

    def ascending(self, tri, t, edge):
        """Does the arrow at this slot run from the low vertex to the high?"""
        i, j = edge
        key = (t, (i, j) if i < j else (j, i))
        cls = tri.edge_class_of[key]
        sign = tri.edge_sign_of[key]
        up = self.bits[cls] == 0
        return up if sign == 1 else not up


def _face_clauses(tri):
    """Two forbidden-cycle clauses per quotient face.

    A literal (var, b) is satisfied when the assignment gives bits[var]
    == b.  Tautological clauses (a variable required both ways) are
    dropped; duplicate literals are merged.
    """
    clauses = []
    for (t, f), _ in tri.face_classes:
        i, j, k = [v for v in range(4) if v != f]
        lits = {}
        for (a, b) in ((i, j), (j, k), (i, k)):
            key = (t, (a, b))
            cls = tri.edge_class_of[key]
            neg = 0 if tri.edge_sign_of[key] == 1 else 1
            lits[(a, b)] = (cls, neg)
        cij, nij = lits[(i, j)]
        cjk, njk = lits[(j, k)]
        cik, nik = lits[(i, k)]
        # ascending arrows around (i,j,k) would cycle unless i->k ascends too
        for cl in ([(cij, 1 - nij), (cjk, 1 - njk), (cik, nik)],
                   [(cij, nij), (cjk, njk), (cik, 1 - nik)]):
            seen = {}
            taut = False
            for var, b in cl:
                if var in seen and seen[var] != b:
                    taut = True
                    break
                seen[var] = b
            if not taut:
                clauses.append(tuple(seen.items()))
    return clauses


def _all_sat(clauses, nvars, fixed):
    """Every satisfying assignment, by backtracking with unit propagation."""
    assign = [None] * nvars
    for v, b in fixed.items():
        assign[v] = b

    def propagate():
        """Returns the list of variables set, or None on conflict."""
        trail = []
        while True:
            progressed = False
            for cl in clauses:
                unit = None
                open_count = 0
                satisfied = False
                for (v, b) in cl:
                    a = assign[v]
                    if a is None:
                        unit = (v, b)
                        open_count += 1
                    elif a == b:
                        satisfied = True
                        break
                if satisfied:
                    continue
                if open_count == 0:
                    for v in trail:
                        assign[v] = None
                    return None
                if open_count == 1:
                    v, b = unit
                    assign[v] = b
                    trail.append(v)
                    progressed = True
            if not progressed:
                return trail

    def recurse():
        trail = propagate()
        if trail is None:
            return
        free = next((v for v in range(nvars) if assign[v] is None), None)
        if free is None:
            yield tuple(assign)
        else:
            for b in (0, 1):
                assign[free] = b
                yield from recurse()
            assign[free] = None
        for v in trail:
            assign[v] = None

    yield from recurse()


def enumerate_acyclic(tri):
    """All orientations with no directed face cycle.

    The first edge class's bit is pinned to halve the search; every
    solution is emitted together with its global reversal, which is
    acyclic exactly when the solution is.
    """
    nvars = len(tri.edge_classes)
    clauses = _face_clauses(tri)
    for sol in _all_sat(clauses, nvars, {0: 0}):
        mu = EdgeOrientation(sol)
        yield mu
        yield mu.flipped()


class EdgeClassification:
    """Per-slot roles and per-class statistics of an acyclic orientation."""

    __slots__ = ("role_of", "position", "vertex_at", "mixed_count", "sink")

    def __init__(self, role_of, position, vertex_at, mixed_count, sink):
        self.role_of = role_of
        self.position = position
        self.vertex_at = vertex_at
        self.mixed_count = mixed_count
        self.sink = sink

    def roles_in_tet(self, t):
        return {e: self.role_of[(t, e)] for e in EDGES}

    def short_edges(self, t):
        """The (bottom, top) compatibly short edges of a tetrahedron."""
        va = self.vertex_at[t]
        bottom = tuple(sorted((va[0], va[1])))
        top = tuple(sorted((va[2], va[3])))
        return bottom, top


def classify_edges(tri, mu):
    """Roles induced by the per-tetrahedron vertex order.

    Raises NotAcyclic when some tetrahedron's arrows do not order its
    vertices (equivalently some face is a directed cycle).
    """
    role_of = {}
    position = []
    vertex_at = []
    for t in range(tri.n):
        indeg = [0, 0, 0, 0]
        for (i, j) in EDGES:
            if mu.ascending(tri, t, (i, j)):
                indeg[j] += 1
            else:
                indeg[i] += 1
        if sorted(indeg) != [0, 1, 2, 3]:
            raise NotAcyclic("tet %d arrows contain a directed cycle" % t)
        pos = tuple(indeg)
        position.append(pos)
        va = [0] * 4
        for v in range(4):
            va[pos[v]] = v
        vertex_at.append(tuple(va))
        for (i, j) in EDGES:
            a, b = pos[i], pos[j]
            role_of[(t, (i, j))] = _ROLE_BY_POSITIONS[(a, b) if a < b else (b, a)]
    mixed_count = []
    sink = []
    for cls in tri.edge_classes:
        roles = [role_of[(t, e)] for (t, e, _) in cls.slots]
        mixed_count.append(sum(1 for r in roles if r == ROLE_MIXED))
        sink.append(all(r == ROLE_VERY_LONG for r in roles))
    return EdgeClassification(role_of, position, vertex_at, mixed_count, sink)


class FaceRelation:
    """Union-find over quotient faces generated by compatibly short edges."""

    __slots__ = ("parent", "class_count", "rectangles")

    def __init__(self, parent, class_count, rectangles):
        self.parent = parent
        self.class_count = class_count
        self.rectangles = rectangles

    def find(self, g):
        root = g
        while self.parent[root] != root:
            root = self.parent[root]
        return root

    def together(self, g1, g2):
        return self.find(g1) == self.find(g2)


def face_relation(tri, classification):
    """Pair the two faces at each compatibly short edge, per tetrahedron.

    Also records the generating rectangles: (tet, short edge, face pair)
    with faces named by their face index in the tetrahedron.
    """
    m = len(tri.face_classes)
    parent = list(range(m))

    def find(g):
        root = g
        while parent[root] != root:
            root = parent[root]
        while parent[g] != root:
            parent[g], g = root, parent[g]
        return root

    def union(g1, g2):
        r1, r2 = find(g1), find(g2)
        if r1 != r2:
            parent[r2] = r1

    rectangles = []
    for t in range(tri.n):
        va = classification.vertex_at[t]
        for (p_lo, p_hi) in ((0, 1), (2, 3)):
            edge = tuple(sorted((va[p_lo], va[p_hi])))
            faces = EDGE_COFACES[edge]
            rectangles.append((t, edge, faces))
            union(tri.face_class_of[(t, faces[0])],
                  tri.face_class_of[(t, faces[1])])
    for g in range(m):
        find(g)
    count = len({find(g) for g in range(m)})
    return FaceRelation(parent, count, rectangles)


class FoliarVerdict:
    """Outcome of the foliar test with the first failed condition."""

    __slots__ = ("foliar", "reason", "face_class_count")

    def __init__(self, foliar, reason, face_class_count):
        self.foliar = foliar
        self.reason = reason
        self.face_class_count = face_class_count

    def __bool__(self):
        return self.foliar

    def __repr__(self):
        if self.foliar:
            return "FoliarVerdict(foliar)"
        return "FoliarVerdict(not foliar: %s)" % self.reason


def _edge_endpoints(tri, idx):
    t, (i, j) = tri.edge_classes[idx].rep
    return tri.vertex_class_of[(t, i)], tri.vertex_class_of[(t, j)]


def _edge_head_tail(tri, mu, idx):
    """Vertex classes at the tail and head of a directed edge class."""
    t, (i, j) = tri.edge_classes[idx].rep
    if mu.ascending(tri, t, (i, j)):
        return tri.vertex_class_of[(t, i)], tri.vertex_class_of[(t, j)]
    return tri.vertex_class_of[(t, j)], tri.vertex_class_of[(t, i)]


def is_foliar(tri, mu):
    """Foliar test for closed triangulations.

    One vertex: acyclic, no sink edge, one face class.  Several
    vertices: additionally every vertex class carries a loop edge, the
    directed graph on vertex classes is strongly connected, and the
    face class count equals the vertex class count.
    """
    if tri.kind != "closed":
        raise InputError("foliar test applies to closed triangulations")
    try:
        classification = classify_edges(tri, mu)
    except NotAcyclic:
        return FoliarVerdict(False, "orientation is not acyclic", None)
    if any(classification.sink):
        return FoliarVerdict(False, "sink edge present", None)
    relation = face_relation(tri, classification)
    v_count = len(tri.vertex_classes)
    if v_count > 1:
        has_loop = [False] * v_count
        for idx in range(len(tri.edge_classes)):
            a, b = _edge_endpoints(tri, idx)
            if a == b:
                has_loop[a] = True
        if not all(has_loop):
            return FoliarVerdict(False, "some vertex class has no loop edge",
                                 relation.class_count)
        if not _strongly_connected(tri, mu, v_count):
            return FoliarVerdict(False,
                                 "edge digraph on vertex classes is not "
                                 "strongly connected", relation.class_count)
    if relation.class_count != v_count:
        return FoliarVerdict(False,
                             "face relation has %d classes, expected %d"
                             % (relation.class_count, v_count),
                             relation.class_count)
    return FoliarVerdict(True, None, relation.class_count)


def _strongly_connected(tri, mu, v_count):
    succ = [set() for _ in range(v_count)]
    pred = [set() for _ in range(v_count)]
    for idx in range(len(tri.edge_classes)):
        tail, head = _edge_head_tail(tri, mu, idx)
        succ[tail].add(head)
        pred[head].add(tail)

    def reaches(adj):
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == v_count

    return reaches(succ) and reaches(pred)


def pillow_move(tri, tet, edge):
    """Insert a two-tetrahedron pillow along two faces sharing an edge.

    The two faces of the tetrahedron containing the chosen edge are
    unglued; a pair of new tetrahedra enclosing a fresh valence-two
    edge is inserted between them and the old targets.  Returns a new
    triangulation with two more tetrahedra and two more edge classes
    (the fresh valence-two edge, plus the chosen edge's class splits
    at the insertion).
    """
    if tri.kind != "closed":
        raise InvalidSite("pillow insertion applies to closed triangulations")
    if not (0 <= tet < tri.n):
        raise InvalidSite("tetrahedron %r out of range" % (tet,))
    i, j = sorted(edge)
    if (i, j) not in EDGES:
        raise InvalidSite("%r is not an edge of a tetrahedron" % (edge,))
    k, l = EDGE_COFACES[(i, j)]
    # faces of `tet` containing the edge are the ones opposite k and l
    tk, pk = tri.gluings[tet][k]
    tl, pl = tri.gluings[tet][l]
    gl = [[(t2, tuple(p)) for (t2, p) in row] for row in tri.gluings]
    P, Q = tri.n, tri.n + 1
    ident = (0, 1, 2, 3)
    p_row = [None] * 4
    q_row = [None] * 4
    p_row[k] = (tet, ident)
    p_row[l] = (tet, ident)
    p_row[i] = (Q, ident)
    p_row[j] = (Q, ident)
    q_row[i] = (P, ident)
    q_row[j] = (P, ident)
    gl[tet][k] = (P, ident)
    gl[tet][l] = (P, ident)
    if tk == tet and pk[k] == l:
        # the two faces were glued to each other; the pillow's outer
        # faces inherit that identification
        q_row[k] = (Q, pk)
        q_row[l] = (Q, pl)
    else:
        q_row[k] = (tk, pk)
        q_row[l] = (tl, pl)
        gl[tk][pk[k]] = (Q, perm_inverse(pk))
        gl[tl][pl[l]] = (Q, perm_inverse(pl))
    gl.append(p_row)
    gl.append(q_row)
    return Triangulation(gl)
