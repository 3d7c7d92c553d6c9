#!/usr/bin/env python3
"""Bistellar 2-3 move on closed triangulations.

Replaces two distinct tetrahedra glued along a face by three around a
fresh central edge.  The manifold, vertex count, and orientability are
untouched, so walks built from this move explore triangulations of a
fixed manifold.  Offline search tooling.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ordercert.triangulation import Triangulation, perm_inverse


def two_three(tri, tet_a, face_f):
    """New gluing table after the 2-3 move at face `face_f` of `tet_a`.

    Returns None when the move does not apply (the face partner is the
    same tetrahedron).
    """
    tet_b, p = tri.gluings[tet_a][face_f]
    if tet_b == tet_a:
        return None
    g = p[face_f]
    tri_a = [v for v in range(4) if v != face_f]
    i, j, k = tri_a

    # new tet m omits triangle vertex m; labels 0 apex-from-a, 1
    # apex-from-b, 2 and 3 the remaining triangle vertices in order
    keep = [t for t in range(tri.n) if t not in (tet_a, tet_b)]
    newindex = {t: idx for idx, t in enumerate(keep)}
    base = len(keep)

    def tri_label(m, v):
        others = [x for x in tri_a if x != tri_a[m]]
        return 2 + others.index(v)

    # label maps A-vertices -> new tet m's labels (face of A opposite
    # triangle vertex m becomes the new tet's face 1), and same from B
    bmap = {}
    for m in range(3):
        qa = [None] * 4
        qa[face_f] = 0
        qa[tri_a[m]] = 1
        for v in tri_a:
            if v != tri_a[m]:
                qa[v] = tri_label(m, v)
        bmap[(tet_a, tri_a[m])] = (m, tuple(qa))
        qb = [None] * 4
        qb[g] = 1
        qb[p[tri_a[m]]] = 0
        for v in tri_a:
            if v != tri_a[m]:
                qb[p[v]] = tri_label(m, v)
        bmap[(tet_b, p[tri_a[m]])] = (m, tuple(qb))

    # kept rows with renumbered targets; faces that pointed into the
    # bipyramid get overwritten by the boundary rerouting below
    rows = []
    for t in keep:
        row = []
        for f in range(4):
            tt2, pp2 = tri.gluings[t][f]
            row.append((newindex[tt2], pp2) if tt2 in newindex else None)
        rows.append(row)
    new_rows = [[None] * 4 for _ in range(3)]

    # internal faces around the central edge: tets m and m' share the
    # face keeping their common triangle vertex
    for m, mm in ((0, 1), (0, 2), (1, 2)):
        common = [v for v in range(3) if v not in (m, mm)][0]
        lab_m = tri_label(m, tri_a[common])
        lab_mm = tri_label(mm, tri_a[common])
        perm = [None] * 4
        perm[0], perm[1] = 0, 1
        perm[lab_m] = lab_mm
        # the remaining slot of m is its face toward mm
        rem_m = 5 - lab_m
        perm[rem_m] = 5 - lab_mm
        new_rows[m][rem_m] = (base + mm, tuple(perm))
        new_rows[mm][5 - lab_mm] = (base + m, tuple(perm_inverse(perm)))

    # external faces: reroute the old bipyramid boundary
    for (src_t, src_v), (m, q) in bmap.items():
        # q maps src labels to new labels; boundary face of the old tet
        # is the one opposite src_v
        old_face = src_v
        tt, pp = tri.gluings[src_t][old_face]
        tgt = (tt, pp[old_face])
        qi = perm_inverse(q)
        if tgt in bmap:
            m2, q2 = bmap[tgt]
            perm = tuple(q2[pp[qi[x]]] for x in range(4))
            new_rows[m][q[old_face]] = (base + m2, perm)
        else:
            perm = tuple(pp[qi[x]] for x in range(4))
            new_rows[m][q[old_face]] = (newindex[tt], perm)
            rows[newindex[tt]][pp[old_face]] = (base + m, tuple(perm_inverse(perm)))

    table = [[list(x) for x in row] for row in rows]
    for m in range(3):
        table.append([[t2, list(pp)] for (t2, pp) in new_rows[m]])
    return table


def three_two(tri, edge_index):
    """New gluing table after the 3-2 move around edge class edge_index.

    Inverse of the 2-3 move.  Returns None unless the class has valence
    three with three distinct tetrahedra around it.
    """
    cls = tri.edge_classes[edge_index]
    if len(cls.slots) != 3:
        return None
    if len({t for (t, _, _) in cls.slots}) != 3:
        return None

    # walk the ring: per tet an oriented edge pair (a, b), the side
    # vertex s shared with the previous tet, and the side vertex u
    # shared with the next
    t0, (i0, j0) = cls.rep
    side = [v for v in range(4) if v not in (i0, j0)]
    state = (t0, i0, j0, side[0], side[1])
    ring = []
    for _ in range(3):
        ring.append(state)
        t, a, b, s, u = state
        tt, pp = tri.gluings[t][s]
        a2, b2, s2 = pp[a], pp[b], pp[u]
        u2 = [v for v in range(4) if v not in (a2, b2, s2)][0]
        state = (tt, a2, b2, s2, u2)
    if state != ring[0]:
        return None

    keep = [t for t in range(tri.n) if t not in {r[0] for r in ring}]
    newindex = {t: idx for idx, t in enumerate(keep)}
    base = len(keep)

    # new tet 0 keeps the a-apex at label 0, new tet 1 the b-apex; the
    # shared triangle vertex entering tet i of the ring gets label 1+i
    bmap = {}
    for i, (t, a, b, s, u) in enumerate(ring):
        q = [None] * 4
        q[a], q[s], q[u], q[b] = 0, 1 + i, 1 + (i + 1) % 3, 1 + (i + 2) % 3
        bmap[(t, b)] = (0, tuple(q))
        r = [None] * 4
        r[b], r[s], r[u], r[a] = 0, 1 + i, 1 + (i + 1) % 3, 1 + (i + 2) % 3
        bmap[(t, a)] = (1, tuple(r))

    rows = []
    for t in keep:
        row = []
        for f in range(4):
            tt2, pp2 = tri.gluings[t][f]
            row.append((newindex[tt2], pp2) if tt2 in newindex else None)
        rows.append(row)
    new_rows = [[None] * 4 for _ in range(2)]
    ident = (0, 1, 2, 3)
    new_rows[0][0] = (base + 1, ident)
    new_rows[1][0] = (base + 0, ident)

    for (src_t, src_face), (m, q) in bmap.items():
        tt, pp = tri.gluings[src_t][src_face]
        tgt = (tt, pp[src_face])
        qi = perm_inverse(q)
        if tgt in bmap:
            m2, q2 = bmap[tgt]
            perm = tuple(q2[pp[qi[x]]] for x in range(4))
            new_rows[m][q[src_face]] = (base + m2, perm)
        else:
            perm = tuple(pp[qi[x]] for x in range(4))
            new_rows[m][q[src_face]] = (newindex[tt], perm)
            rows[newindex[tt]][pp[src_face]] = (base + m,
                                                tuple(perm_inverse(perm)))

    table = [[list(x) for x in row] for row in rows]
    for m in range(2):
        table.append([[t2, list(pp)] for (t2, pp) in new_rows[m]])
    return table


if __name__ == "__main__":
    # smoke: every 2-3 site of the three-torus yields a valid closed
    # one-vertex triangulation with one more tetrahedron
    T3 = [[[3, [3, 0, 1, 2]], [2, [0, 1, 2, 3]], [1, [0, 1, 2, 3]], [4, [1, 2, 3, 0]]],
          [[5, [3, 0, 1, 2]], [4, [0, 1, 2, 3]], [0, [0, 1, 2, 3]], [2, [1, 2, 3, 0]]],
          [[1, [3, 0, 1, 2]], [0, [0, 1, 2, 3]], [3, [0, 1, 2, 3]], [5, [1, 2, 3, 0]]],
          [[4, [3, 0, 1, 2]], [5, [0, 1, 2, 3]], [2, [0, 1, 2, 3]], [0, [1, 2, 3, 0]]],
          [[0, [3, 0, 1, 2]], [1, [0, 1, 2, 3]], [5, [0, 1, 2, 3]], [3, [1, 2, 3, 0]]],
          [[2, [3, 0, 1, 2]], [3, [0, 1, 2, 3]], [4, [0, 1, 2, 3]], [1, [1, 2, 3, 0]]]]

    sys.path.insert(0, str(Path(__file__).resolve().parent))
    from enumerate_tri import canonical_signature

    tri = Triangulation(T3)
    count = 0
    for t in range(tri.n):
        for f in range(4):
            table = two_three(tri, t, f)
            if table is None:
                continue
            out = Triangulation(table)
            assert out.kind == "closed", out.kind
            assert out.n == tri.n + 1
            assert len(out.vertex_classes) == 1
            assert len(out.edge_classes) == len(tri.edge_classes) + 1
            count += 1
            # the central edge of the bipyramid has valence three;
            # undoing the move there must recover the input
            central = out.edge_class_of[(out.n - 3, (0, 1))]
            back = three_two(out, central)
            assert back is not None
            assert canonical_signature(back) == canonical_signature(T3)
    print("2-3 sites checked with 3-2 roundtrip:", count)

    # every valence-three edge of every 2-3 image admits the reverse
    # move or is skipped cleanly
    undone = 0
    for t in range(tri.n):
        for f in range(4):
            table = two_three(tri, t, f)
            if table is None:
                continue
            out = Triangulation(table)
            for idx in range(len(out.edge_classes)):
                back = three_two(out, idx)
                if back is None:
                    continue
                res = Triangulation(back)
                assert res.kind == "closed"
                assert res.n == out.n - 1
                assert len(res.vertex_classes) == 1
                undone += 1
    print("3-2 applications validated:", undone)
