#!/usr/bin/env python3
"""Random Pachner walk over triangulations of one closed manifold,
testing every acyclic orientation for the foliar conditions.  Hits are
appended as JSON lines.  Offline search tooling.

The walk grows with 2-3 moves to a target band, then hovers there by
mixing 2-3 and 3-2 moves, with occasional pillow insertions.  Sizes in
the band are where searches of this kind historically succeed; tiny
tables rarely clear the sink-edge and face-relation conditions.
"""

from __future__ import annotations

import json
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pachner import three_two, two_three
from ordercert.orientations import enumerate_acyclic, is_foliar, pillow_move
from ordercert.triangulation import Triangulation

T3 = [[[3, [3, 0, 1, 2]], [2, [0, 1, 2, 3]], [1, [0, 1, 2, 3]], [4, [1, 2, 3, 0]]],
      [[5, [3, 0, 1, 2]], [4, [0, 1, 2, 3]], [0, [0, 1, 2, 3]], [2, [1, 2, 3, 0]]],
      [[1, [3, 0, 1, 2]], [0, [0, 1, 2, 3]], [3, [0, 1, 2, 3]], [5, [1, 2, 3, 0]]],
      [[4, [3, 0, 1, 2]], [5, [0, 1, 2, 3]], [2, [0, 1, 2, 3]], [0, [1, 2, 3, 0]]],
      [[0, [3, 0, 1, 2]], [1, [0, 1, 2, 3]], [5, [0, 1, 2, 3]], [3, [1, 2, 3, 0]]],
      [[2, [3, 0, 1, 2]], [3, [0, 1, 2, 3]], [4, [0, 1, 2, 3]], [1, [1, 2, 3, 0]]]]


def foliar_hits_of(tri):
    return [mu for mu in enumerate_acyclic(tri) if is_foliar(tri, mu)]


def random_step(tri, rng, lo, hi):
    """One random move keeping the tetrahedron count near [lo, hi]."""
    grow = tri.n < lo or (tri.n < hi and rng.random() < 0.5)
    if not grow:
        idxs = list(range(len(tri.edge_classes)))
        rng.shuffle(idxs)
        for idx in idxs:
            table = three_two(tri, idx)
            if table is not None:
                return Triangulation(table)
        grow = True
    if rng.random() < 0.05:
        t = rng.randrange(tri.n)
        e = rng.choice([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        return pillow_move(tri, t, e)
    while True:
        table = two_three(tri, rng.randrange(tri.n), rng.randrange(4))
        if table is not None:
            return Triangulation(table)


def main():
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    lo = int(sys.argv[2]) if len(sys.argv) > 2 else 14
    hi = int(sys.argv[3]) if len(sys.argv) > 3 else 20
    out = Path(sys.argv[4]) if len(sys.argv) > 4 else Path("/root/notes/foliar_hits.jsonl")
    rng = random.Random(seed)
    tri = Triangulation(T3)
    steps = 0
    hits = 0
    t0 = time.time()
    while True:
        tri = random_step(tri, rng, lo, hi)
        steps += 1
        found = foliar_hits_of(tri)
        if found:
            hits += 1
            rec = {"n": tri.n,
                   "gluings": [[[t2, list(p)] for (t2, p) in row]
                               for row in tri.gluings],
                   "orientations": [list(mu.bits) for mu in found]}
            with out.open("a") as fh:
                fh.write(json.dumps(rec) + "\n")
            print(f"HIT at step {steps}: n={tri.n} "
                  f"({len(found)} orientations)", flush=True)
            if hits >= 5:
                print("enough hits, stopping", flush=True)
                return
        if steps % 100 == 0:
            rate = steps / (time.time() - t0)
            print(f"step {steps} n={tri.n} hits={hits} {rate:.2f}/s",
                  flush=True)


if __name__ == "__main__":
    main()
