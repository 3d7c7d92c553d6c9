#!/usr/bin/env python3
"""Derive peripheral curve weights for one-cusped ideal fixtures.

Picks a homology basis of the cusp torus from the dual cellulation,
locates the primitive class whose image in the manifold's first
homology is torsion (the homological longitude), completes it to a
basis with a meridian, and emits the side crossing weight tables the
package's triangulation format expects.  Offline fixture tooling.
"""

from __future__ import annotations

import sys
from math import gcd
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ordercert.cusp import CuspComplex, SpineHomology, _hnf_pivots
from ordercert.triangulation import Triangulation
from ordercert.zlattice import hermite_normal_form


def slot_table_from_side_weights(tri, w):
    """Side-class weights -> per-slot crossing table W[t][v][f]."""
    W = [[[0] * 4 for _ in range(4)] for _ in range(tri.n)]
    for s, ((t, v, f), (t2, v2, f2)) in enumerate(tri.side_classes):
        W[t][v][f] += w[s]
        W[t2][v2][f2] -= w[s]
    return W


def face_cycle_from_slot_table(tri, W):
    out = []
    for (t, f), _ in tri.face_classes:
        out.append(sum(W[t][v][f] for v in range(4) if v != f))
    return out


def derive_peripheral(gluings):
    """Returns {"meridian": table, "longitude": table} for a 1-cusped
    ideal triangulation whose first Betti number is 1.  The longitude is
    the homological one; the meridian is any basis completion."""
    tri = Triangulation(gluings)
    assert tri.kind == "ideal" and len(tri.vertex_classes) == 1
    cusp = CuspComplex(tri)
    loc = cusp._local[0]
    K, C = loc["K"], loc["C"]

    # rows of the cycle coordinate lattice not hit by a pivot of C give
    # a free basis of the quotient (torus homology is torsion free)
    H, _ = hermite_normal_form(C)
    pivot_rows = []
    for j in range(H.cols):
        col = H.column(j)
        nz = [(i, v) for i, v in enumerate(col) if v != 0]
        if not nz:
            break
        assert nz[0][1] == 1, "cusp homology has torsion?"
        pivot_rows.append(nz[0][0])
    free_rows = [i for i in range(K.cols) if i not in pivot_rows]
    assert len(free_rows) == 2

    spine = SpineHomology(tri)
    assert spine.free_rank == 1, "fixture is not a rational homology solid torus"
    v = spine.free_functionals()[0]

    def image_in_manifold(y):
        w = K.mul_vector(y)
        wg = [0] * len(tri.side_classes)
        for i, s in enumerate(loc["sides"]):
            wg[s] = w[i]
        W = slot_table_from_side_weights(tri, wg)
        fc = face_cycle_from_slot_table(tri, W)
        yc = spine.cycle_coords(fc)
        return sum(a * b for a, b in zip(v, yc))

    def unit(row):
        e = [0] * K.cols
        e[row] = 1
        return e

    e1, e2 = unit(free_rows[0]), unit(free_rows[1])
    n1, n2 = image_in_manifold(e1), image_in_manifold(e2)
    assert (n1, n2) != (0, 0)
    g = gcd(n1, n2)
    a, b = n2 // g, -n1 // g
    # basis completion: x*b - y*a = 1
    x, y = _bezout(b, -a)
    lon = [a * u + b * w for u, w in zip(e1, e2)]
    mer = [x * u + y * w for u, w in zip(e1, e2)]

    assert cusp.is_basis(0, mer, lon)
    assert image_in_manifold(lon) == 0

    tables = {}
    for name, yy in (("meridian", mer), ("longitude", lon)):
        wg = cusp.weights_from_coords(0, yy)
        tables[name] = slot_table_from_side_weights(tri, wg)
    return tables


def _bezout(p, q):
    """(x, y) with x*p + y*q = gcd(p, q)."""
    old_r, r = p, q
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_x, x = x, old_x - quo * x
        old_y, y = y, old_y - quo * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    return old_x, old_y


if __name__ == "__main__":
    import json
    data = json.load(open(sys.argv[1]))
    tables = derive_peripheral(data["gluings"])
    data["peripheral"] = tables
    tri = Triangulation(data["gluings"], peripheral=tables)
    from ordercert.cusp import homological_longitude
    print("homological longitude in declared basis:", homological_longitude(tri))
    json.dump(data, open(sys.argv[1], "w"), indent=1)
    print("updated", sys.argv[1])
