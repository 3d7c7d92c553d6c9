"""Scan closed one-vertex triangulations for foliar orientations."""

import sys
import time

sys.path.insert(0, "/root/pkg/src")
sys.path.insert(0, "/root/pkg/tools")

from ordercert.triangulation import Triangulation
from ordercert.orientations import enumerate_acyclic, is_foliar
from enumerate_tri import enumerate_gluings, canonical_signature


def main(n: int) -> None:
    seen = set()
    tables = 0
    hits = 0
    t0 = time.time()
    for gl in enumerate_gluings(n):
        try:
            tri = Triangulation(gl)
        except Exception:
            continue
        if tri.kind != "closed" or len(tri.vertex_classes) != 1:
            continue
        sig = canonical_signature(gl)
        if sig in seen:
            continue
        seen.add(sig)
        tables += 1
        for mu in enumerate_acyclic(tri):
            v = is_foliar(tri, mu)
            if v.foliar:
                hits += 1
                print("FOLIAR", gl, mu, flush=True)
                break
        if tables % 200 == 0:
            print(f"  ...{tables} tables, {hits} foliar, {time.time()-t0:.0f}s",
                  flush=True)
    print(f"n={n}: closed 1-vertex tables {tables}, foliar {hits}, "
          f"{time.time()-t0:.0f}s", flush=True)


if __name__ == "__main__":
    main(int(sys.argv[1]))
