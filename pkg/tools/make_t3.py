"""Construct the 6-tetrahedron one-vertex triangulation of the 3-torus.

Unit cube with opposite faces identified by translation, cut into six
tetrahedra along chains 0 <= x_{s(1)} <= x_{s(2)} <= x_{s(3)} <= 1.
"""

import itertools
import json
import sys

sys.path.insert(0, "/root/pkg/src")

from ordercert.triangulation import Triangulation

E = {1: (1, 0, 0), 2: (0, 1, 0), 3: (0, 0, 1)}


def add(p, q):
    return tuple(a + b for a, b in zip(p, q))


def tet_verts(sigma):
    a, b, c = sigma
    v1 = E[a]
    v2 = add(E[a], E[b])
    return [(0, 0, 0), v1, v2, (1, 1, 1)]


def main() -> None:
    sigmas = list(itertools.permutations((1, 2, 3)))
    verts = [tet_verts(s) for s in sigmas]
    # face key -> (tet, face, coord -> local vertex index)
    table = {}
    gluings = [[None] * 4 for _ in sigmas]

    def face_coords(t, f):
        return {verts[t][v]: v for v in range(4) if v != f}

    entries = []
    for t, s in enumerate(sigmas):
        a, b, c = s
        for f in range(4):
            fc = face_coords(t, f)
            if f == 0:
                # lies in x_a = 1; translate down to x_a = 0
                fc = {add(p, tuple(-x for x in E[a])): v for p, v in fc.items()}
            entries.append((t, f, fc))

    by_key = {}
    for t, f, fc in entries:
        key = frozenset(fc)
        by_key.setdefault(key, []).append((t, f, fc))

    for key, pair in by_key.items():
        assert len(pair) == 2, (key, pair)
        (t1, f1, fc1), (t2, f2, fc2) = pair
        p1 = [None] * 4
        for coord, v in fc1.items():
            p1[v] = fc2[coord]
        p1[f1] = f2
        p2 = [None] * 4
        for coord, v in fc2.items():
            p2[v] = fc1[coord]
        p2[f2] = f1
        gluings[t1][f1] = (t2, tuple(p1))
        gluings[t2][f2] = (t1, tuple(p2))

    tri = Triangulation(gluings)
    print("kind", tri.kind, "vertices", len(tri.vertex_classes))
    print("edge classes", len(tri.edge_classes),
          "valences", sorted(len(c.slots) for c in tri.edge_classes))
    gl = [[(t2, list(p)) for (t2, p) in row] for row in gluings]
    print(json.dumps(gl, separators=(",", ":")))

    from ordercert.orientations import enumerate_acyclic, is_foliar
    total = 0
    foliar = 0
    sample = None
    for mu in enumerate_acyclic(tri):
        total += 1
        v = is_foliar(tri, mu)
        if v.foliar:
            foliar += 1
            if sample is None:
                sample = mu
    print("acyclic", total, "foliar", foliar)
    if sample is not None:
        print("sample", json.dumps(sample))


if __name__ == "__main__":
    main()
