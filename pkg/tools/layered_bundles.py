"""Layered 1-vertex triangulations of torus bundles over the circle.

One tetrahedron per flip of the 2-triangle torus triangulation; the
letter between consecutive layers (R or L relabeling of the surviving
edge pair) fixes both interface gluings, and the closing identification
follows the same rule from the last layer back to the first.  Words are
scanned for valid closed 1-vertex tables, which then get an exhaustive
foliar-orientation search.
"""

import itertools
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ordercert.errors import CertError
from ordercert.triangulation import Triangulation, perm_inverse
from ordercert.orientations import enumerate_acyclic, is_foliar

# per letter: (perm at face 3 of layer k, perm at face 0 of layer k),
# both mapping into layer k+1
LETTER_PERMS = {
    "R": ((0, 3, 1, 2), (1, 2, 0, 3)),
    "L": ((0, 1, 3, 2), (1, 0, 2, 3)),
}


def bundle_table(word):
    n = len(word)
    gl = [[None] * 4 for _ in range(n)]
    for k, letter in enumerate(word):
        p3, p0 = LETTER_PERMS[letter]
        k2 = (k + 1) % n
        for f, p in ((3, p3), (0, p0)):
            if gl[k][f] is not None or gl[k2][p[f]] is not None:
                return None
            gl[k][f] = (k2, p)
            gl[k2][p[f]] = (k, perm_inverse(p))
    return gl


def main():
    t0 = time.time()
    for n in range(2, 13):
        words = 0
        built = 0
        foliar_words = []
        for bits in itertools.product("RL", repeat=n):
            word = "".join(bits)
            words += 1
            gl = bundle_table(word)
            if gl is None:
                continue
            try:
                tri = Triangulation(gl)
            except CertError:
                continue
            if tri.kind != "closed" or len(tri.vertex_classes) != 1:
                continue
            built += 1
            hits = []
            total = 0
            for mu in enumerate_acyclic(tri):
                total += 1
                if is_foliar(tri, mu).foliar:
                    hits.append(list(mu))
            if hits:
                foliar_words.append((word, total, len(hits)))
                rec = {"word": word,
                       "gluings": [[[t2, list(p)] for (t2, p) in row]
                                   for row in gl],
                       "acyclic": total, "foliar": hits}
                with open("/root/notes/bundle_hits.jsonl", "a") as fh:
                    fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        print(f"n={n}: words {words}, valid closed 1-vertex {built}, "
              f"foliar words {len(foliar_words)}  {time.time()-t0:.0f}s",
              flush=True)
        for w, total, k in foliar_words[:6]:
            print(f"    {w}: {k} foliar of {total} acyclic", flush=True)


if __name__ == "__main__":
    main()
