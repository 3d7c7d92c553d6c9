"""Euler cochain of a foliar orientation and its integral coboundary test.

The cochain assigns 1 - mixed/2 to each edge class.  Whether its class
vanishes is an integer linear problem against the dual coboundary
matrix, whose row for an edge class records the signed crossings of
each quotient face along the rotational walk around the edge.  Both the
walk direction of every row and the co-orientation of every face are
arbitrary sign conventions; flipping them negates rows (together with
their cochain entry) or columns and leaves solvability untouched.
"""

from __future__ import annotations

from .errors import InputError, NonIntegralCochain, NotFoliar
from .orientations import classify_edges, is_foliar
from .zlattice import IntMatrix, solve_in_image


def coboundary_rows(tri, edge_flip=None, face_flip=None):
    """One row per edge class over quotient faces, with chosen signs."""
    n_edges = len(tri.edge_classes)
    n_faces = len(tri.face_classes)
    ef = list(edge_flip) if edge_flip is not None else [1] * n_edges
    ff = list(face_flip) if face_flip is not None else [1] * n_faces
    if len(ef) != n_edges or any(s not in (1, -1) for s in ef):
        raise InputError("edge sign convention must list +-1 per edge class")
    if len(ff) != n_faces or any(s not in (1, -1) for s in ff):
        raise InputError("face sign convention must list +-1 per quotient face")
    rows = []
    for idx in range(n_edges):
        row = [0] * n_faces
        for (t, _, _, f_out) in tri.walk_edge_class(idx):
            g = tri.face_class_of[(t, f_out)]
            rep = tri.face_classes[g][0]
            crossing = 1 if (t, f_out) == rep else -1
            row[g] += crossing * ff[g]
        rows.append([v * ef[idx] for v in row])
    return rows


def euler_class(tri, mu, edge_flip=None, face_flip=None):
    """Cochain, vanishing verdict, and an exact witness when it vanishes.

    Requires a closed one-vertex triangulation and a foliar orientation.
    Returns {"cochain": [int per edge class], "is_zero": bool,
    "witness": [int per quotient face] or None}; a returned witness w
    satisfies row . w = signed cochain entry for every edge class in
    the chosen sign convention, rechecked here before returning.
    """
    if tri.kind != "closed" or len(tri.vertex_classes) != 1:
        raise InputError(
            "Euler class is computed for closed one-vertex triangulations")
    verdict = is_foliar(tri, mu)
    if not verdict:
        raise NotFoliar(verdict.reason)
    classification = classify_edges(tri, mu)
    phi = []
    for m in classification.mixed_count:
        if m % 2:
            raise NonIntegralCochain(
                "odd mixed count %d on a foliar orientation" % m)
        phi.append(1 - m // 2)
    n_edges = len(tri.edge_classes)
    ef = list(edge_flip) if edge_flip is not None else [1] * n_edges
    rows = coboundary_rows(tri, edge_flip=ef, face_flip=face_flip)
    target = [p * s for p, s in zip(phi, ef)]
    M = IntMatrix(rows)
    witness = solve_in_image(M, target)
    if witness is not None:
        again = M.mul_vector(witness)
        if again != target:
            raise AssertionError("witness failed recheck")
    return {"cochain": phi, "is_zero": witness is not None, "witness": witness}
