#!/usr/bin/env python3
"""Enumerate small orientable triangulations up to combinatorial isomorphism.

Builds gluing tables slot by slot, introducing new tetrahedra in first-use
order with a canonical attaching permutation (which quotients out the
labeling freedom of fresh tetrahedra) and branching over the three odd
permutations for gluings between existing free faces.  Odd permutations
keep every result orientable with all tetrahedra positively oriented.
Results are deduplicated by a BFS canonical signature over all starting
tetrahedra and all 24 relabelings.

Used offline to produce the fixture corpus; not imported by the package.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ordercert.errors import CertError
from ordercert.triangulation import Triangulation, perm_inverse, perm_sign
from ordercert.zlattice import IntMatrix, hermite_normal_form

ODD_PERMS = [p for p in itertools.permutations(range(4)) if perm_sign(p) == -1]
PERMS_BY_IMAGE = {(f, f2): [p for p in ODD_PERMS if p[f] == f2]
                  for f in range(4) for f2 in range(4)}


def canonical_fresh_perm(f):
    """The canonical odd permutation sending face f of the old tet to
    face 0 of a freshly introduced tet."""
    others = [v for v in range(4) if v != f]
    p = [0] * 4
    p[f] = 0
    for k, v in enumerate(others):
        p[v] = k + 1
    if perm_sign(tuple(p)) == 1:
        a, b = others[1], others[2]
        p[a], p[b] = p[b], p[a]
    return tuple(p)


FRESH_PERM = {f: canonical_fresh_perm(f) for f in range(4)}


def enumerate_gluings(n_target):
    """Yield complete gluing tables with exactly n_target tetrahedra."""
    gluings = [[None] * 4]

    def first_open():
        for t, row in enumerate(gluings):
            for f in range(4):
                if row[f] is None:
                    return t, f
        return None

    def recurse():
        slot = first_open()
        if slot is None:
            if len(gluings) == n_target:
                yield [row[:] for row in gluings]
            return
        t, f = slot
        if len(gluings) < n_target:
            p = FRESH_PERM[f]
            t2 = len(gluings)
            gluings.append([None] * 4)
            gluings[t][f] = (t2, p)
            gluings[t2][0] = (t, perm_inverse(p))
            yield from recurse()
            gluings[t][f] = None
            gluings.pop()
        opens = [(t2, f2) for t2 in range(len(gluings)) for f2 in range(4)
                 if gluings[t2][f2] is None and (t2, f2) != (t, f)]
        for (t2, f2) in opens:
            for p in PERMS_BY_IMAGE[(f, f2)]:
                gluings[t][f] = (t2, p)
                gluings[t2][f2] = (t, perm_inverse(p))
                yield from recurse()
                gluings[t][f] = None
                gluings[t2][f2] = None

    yield from recurse()


def compose(p, q):
    """(p o q)(x) = p[q[x]]."""
    return tuple(p[q[x]] for x in range(4))


def canonical_signature(gluings):
    """Minimum BFS relabeling signature over all starts and relabelings."""
    n = len(gluings)
    best = None
    for start in range(n):
        for p0 in itertools.permutations(range(4)):
            relabel = {start: p0}
            order = [start]
            sig = []
            k = 0
            ok = True
            while k < len(order):
                t = order[k]
                pt = relabel[t]
                inv = perm_inverse(pt)
                for new_face in range(4):
                    f = inv[new_face]
                    t2, q = gluings[t][f]
                    if t2 not in relabel:
                        # choose the target's relabeling so the gluing
                        # permutation becomes the canonical fresh one
                        target_perm = compose(FRESH_PERM[new_face],
                                              compose(pt, perm_inverse(q)))
                        relabel[t2] = target_perm
                        order.append(t2)
                        sig.append((len(order) - 1, None))
                    else:
                        composite = compose(relabel[t2], compose(q, inv))
                        sig.append((order.index(t2), composite))
                k += 1
            if ok:
                key = tuple((a, b if b is not None else (-1,)) for a, b in sig)
                if best is None or key < best:
                    best = key
    return best


def spine_homology_invariants(tri):
    """Free rank and torsion order of H1 from the dual spine."""
    gens = len(tri.face_classes)
    rows = []
    for idx in range(len(tri.edge_classes)):
        row = [0] * gens
        for t, _, _, f_out in tri.walk_edge_class(idx):
            fc = tri.face_class_of[(t, f_out)]
            rep, _the_other = tri.face_classes[fc]
            row[fc] += 1 if rep == (t, f_out) else -1
        rows.append(row)
    # spanning tree of the dual graph: kill one generator per tree edge
    seen = {0}
    tree_rows = []
    frontier = [0]
    while frontier:
        t = frontier.pop()
        for f in range(4):
            t2, _ = tri.gluings[t][f]
            if t2 not in seen:
                seen.add(t2)
                frontier.append(t2)
                fc = tri.face_class_of[(t, f)]
                row = [0] * gens
                row[fc] = 1
                tree_rows.append(row)
    rel = IntMatrix([[rows[i][j] for i in range(len(rows))] +
                     [tree_rows[i][j] for i in range(len(tree_rows))]
                     for j in range(gens)])
    H, _ = hermite_normal_form(rel)
    pivots = []
    for j in range(H.cols):
        col = H.column(j)
        nz = [v for v in col if v != 0]
        if nz:
            pivots.append(nz[0])
    free_rank = gens - len(pivots)
    torsion = 1
    for p in pivots:
        torsion *= p
    return free_rank, torsion


def survey(n, kind, vertices=None):
    found = {}
    tried = 0
    for gl in enumerate_gluings(n):
        tried += 1
        data = [[[t2, list(p)] for (t2, p) in row] for row in gl]
        try:
            tri = Triangulation(gl)
        except CertError:
            continue
        if tri.kind != kind:
            continue
        if vertices is not None and len(tri.vertex_classes) != vertices:
            continue
        sig = canonical_signature(gl)
        if sig in found:
            continue
        rank, torsion = spine_homology_invariants(tri)
        found[sig] = {
            "gluings": data,
            "edge_classes": len(tri.edge_classes),
            "valences": tri.edge_valences(),
            "vertices": len(tri.vertex_classes),
            "h1_rank": rank,
            "h1_torsion": torsion,
        }
    return found, tried


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("n", type=int)
    ap.add_argument("kind", choices=["ideal", "closed"])
    ap.add_argument("--vertices", type=int, default=1)
    ap.add_argument("--out", type=str, default=None)
    args = ap.parse_args()
    found, tried = survey(args.n, args.kind, args.vertices)
    print("assignments tried: %d, isomorphism classes: %d" % (tried, len(found)))
    items = sorted(found.values(), key=lambda d: (d["edge_classes"], d["valences"]))
    for item in items:
        print("  edges=%d valences=%r H1 rank=%d torsion=%d" %
              (item["edge_classes"], item["valences"], item["h1_rank"],
               item["h1_torsion"]))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(items, fh, indent=1)
        print("wrote %s" % args.out)


if __name__ == "__main__":
    main()
