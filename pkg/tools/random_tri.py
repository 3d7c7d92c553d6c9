"""Sample random orientable 1-vertex closed triangulations, test foliar.

Randomized analog of the exhaustive enumerator: fill slots depth-first,
picking uniformly among the legal moves at each step, restarting on dead
ends.  Each valid closed 1-vertex table gets an exhaustive acyclic
orientation scan and a foliar test.  Hits are appended to the output
file as JSON lines.
"""

import argparse
import json
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from ordercert.errors import CertError
from ordercert.triangulation import Triangulation, perm_inverse
from ordercert.orientations import enumerate_acyclic, is_foliar
from enumerate_tri import FRESH_PERM, PERMS_BY_IMAGE


def random_table(n_target, rng, max_steps=4000):
    gluings = [[None] * 4]
    steps = 0

    def first_open():
        for t, row in enumerate(gluings):
            for f in range(4):
                if row[f] is None:
                    return t, f
        return None

    def recurse():
        nonlocal steps
        steps += 1
        if steps > max_steps:
            return None
        slot = first_open()
        if slot is None:
            return [row[:] for row in gluings] if len(gluings) == n_target else None
        t, f = slot
        moves = []
        if len(gluings) < n_target:
            moves.append(("fresh", None, None))
        for t2 in range(len(gluings)):
            for f2 in range(4):
                if gluings[t2][f2] is None and (t2, f2) != (t, f):
                    for p in PERMS_BY_IMAGE[(f, f2)]:
                        moves.append(("glue", (t2, f2), p))
        rng.shuffle(moves)
        for kind, target, p in moves:
            if kind == "fresh":
                p = FRESH_PERM[f]
                t2 = len(gluings)
                gluings.append([None] * 4)
                gluings[t][f] = (t2, p)
                gluings[t2][0] = (t, perm_inverse(p))
                out = recurse()
                if out is not None:
                    return out
                gluings[t][f] = None
                gluings.pop()
            else:
                t2, f2 = target
                gluings[t][f] = (t2, p)
                gluings[t2][f2] = (t, perm_inverse(p))
                out = recurse()
                if out is not None:
                    return out
                gluings[t][f] = None
                gluings[t2][f2] = None
        return None

    return recurse()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("n_lo", type=int)
    ap.add_argument("n_hi", type=int)
    ap.add_argument("--samples", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", type=str, default="/root/notes/foliar_hits.jsonl")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    t0 = time.time()
    valid = 0
    hits = 0
    for k in range(args.samples):
        n = rng.randint(args.n_lo, args.n_hi)
        gl = random_table(n, rng)
        if gl is None:
            continue
        try:
            tri = Triangulation(gl)
        except CertError:
            continue
        if tri.kind != "closed" or len(tri.vertex_classes) != 1:
            continue
        valid += 1
        foliar_mus = []
        total = 0
        for mu in enumerate_acyclic(tri):
            total += 1
            if is_foliar(tri, mu).foliar:
                foliar_mus.append(list(mu))
        if foliar_mus:
            hits += 1
            rec = {"n": n,
                   "gluings": [[[t2, list(p)] for (t2, p) in row]
                               for row in gl],
                   "acyclic": total,
                   "foliar": foliar_mus}
            with open(args.out, "a") as fh:
                fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
            print(f"HIT n={n} acyclic={total} foliar={len(foliar_mus)}",
                  flush=True)
        if (k + 1) % 500 == 0:
            print(f"  {k+1} samples, {valid} valid closed 1-vertex, "
                  f"{hits} foliar, {time.time()-t0:.0f}s", flush=True)
    print(f"done: {valid} valid, {hits} foliar, {time.time()-t0:.0f}s")


if __name__ == "__main__":
    main()
