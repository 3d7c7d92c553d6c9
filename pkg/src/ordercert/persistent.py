"""Vertical annuli on the cusp torus and persistently foliar orientations.

An acyclic, sink-free edge orientation of a one-cusped ideal
triangulation determines two rectangles per tetrahedron, one at each
compatibly short edge.  Rectangles chain across face gluings into
annuli, and each annulus leaves a closed curve on the cusp torus made
of one corner arc per rectangle, at the inner end of its short edge.
The orientation is persistently foliar when every traced curve is
homologically nontrivial and all the curves are parallel; the common
primitive class is the degeneracy slope, the single filling the
verdict says nothing about.
"""

from __future__ import annotations

from math import gcd

from .cusp import CuspComplex
from .errors import (ArcsDoNotClose, InputError, MissingPeripheralData,
                     SinkEdgePresent)
from .orientations import classify_edges, enumerate_acyclic, face_relation


class VerticalAnnulus:
    """One rectangle cycle with its traced boundary classes."""

    __slots__ = ("rectangles", "curves")

    def __init__(self, rectangles, curves):
        self.rectangles = rectangles
        self.curves = curves

    def __repr__(self):
        return "VerticalAnnulus(%d rectangles, curves %r)" % (
            len(self.rectangles), self.curves)


class AnnulusAnalysis:
    """Outcome of the vertical-annulus trace for one orientation."""

    __slots__ = ("annuli", "persistent", "degeneracy")

    def __init__(self, annuli, persistent, degeneracy):
        self.annuli = annuli
        self.persistent = persistent
        self.degeneracy = degeneracy

    def __repr__(self):
        if self.persistent:
            return "AnnulusAnalysis(persistent, degeneracy %r)" % (
                self.degeneracy,)
        return "AnnulusAnalysis(not persistent)"


def _normalize_slope(x, y):
    g = gcd(x, y)
    p, q = x // g, y // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return p, q


def cusp_annuli(tri, mu, cusp=None):
    """Trace the vertical annuli of an acyclic orientation.

    Raises NotAcyclic or SinkEdgePresent when the orientation fails the
    preconditions, and ArcsDoNotClose if a traced corner arc meets a
    cusp triangle side that carries no continuing arc, which no valid
    input should produce.
    """
    if tri.kind != "ideal" or len(tri.vertex_classes) != 1:
        raise InputError("annulus tracing needs a one-cusped ideal "
                         "triangulation")
    if tri.peripheral is None:
        raise MissingPeripheralData("triangulation has no peripheral curves")
    if cusp is None:
        cusp = CuspComplex(tri)
    (y_m, y_l), = cusp.peripheral_coords()
    classification = classify_edges(tri, mu)
    if any(classification.sink):
        raise SinkEdgePresent("orientation has a sink edge")
    relation = face_relation(tri, classification)

    rect_at_slot = {}
    for r, (t, edge, faces) in enumerate(relation.rectangles):
        for f in faces:
            rect_at_slot[(t, f)] = r

    # rectangles chain through face gluings into cycles
    rect_next = {}
    for r, (t, edge, (fa, fb)) in enumerate(relation.rectangles):
        for f in (fa, fb):
            t2, p = tri.gluings[t][f]
            rect_next[(r, f)] = rect_at_slot[(t2, p[f])]
    unused = set(range(len(relation.rectangles)))
    cycles = []
    while unused:
        r0 = min(unused)
        start_exit = relation.rectangles[r0][2][0]
        cycle = []
        r, f_out = r0, start_exit
        while True:
            cycle.append(r)
            unused.discard(r)
            t = relation.rectangles[r][0]
            t2, p = tri.gluings[t][f_out]
            r2 = rect_next[(r, f_out)]
            fa2, fb2 = relation.rectangles[r2][2]
            f_in = p[f_out]
            f_out2 = fb2 if f_in == fa2 else fa2
            r, f_out = r2, f_out2
            if (r, f_out) == (r0, start_exit):
                break
        cycles.append(cycle)

    # Each rectangle meets the cusp in one corner arc, at the end of
    # its short edge that sits at an inner position of the vertex order
    # (1 for the bottom rectangle, 2 for the top); the arc joins the
    # two sides of that cusp triangle lying in the rectangle's faces.
    # The outer ends stay on the horizontal boundary and never reach
    # the cusp.
    inner_of = []
    for r, (t, edge, faces) in enumerate(relation.rectangles):
        pos = classification.position[t]
        va, vb = edge
        inner_of.append(va if pos[va] in (1, 2) else vb)

    # trace the cusp circles: state = (rectangle, face entered through)
    visited = set()
    annuli = []
    all_classes = []
    for cycle in cycles:
        curves = []
        for r0 in cycle:
            t0, edge0, faces0 = relation.rectangles[r0]
            for f_in0 in faces0:
                state = (r0, f_in0)
                if state in visited:
                    continue
                weights = [0] * len(tri.side_classes)
                r, f_in = state
                while True:
                    t, edge, (fa, fb) = relation.rectangles[r]
                    f_out = fb if f_in == fa else fa
                    # consume the arc in both directions so each circle
                    # is traced exactly once
                    visited.add((r, f_in))
                    visited.add((r, f_out))
                    v = inner_of[r]
                    slot = (t, v, f_out)
                    s = tri.side_class_of[slot]
                    rep = tri.side_classes[s][0]
                    weights[s] += 1 if slot == rep else -1
                    t2, p = tri.gluings[t][f_out]
                    r2 = rect_next[(r, f_out)]
                    v2, f2 = p[v], p[f_out]
                    t2_, edge2, faces2 = relation.rectangles[r2]
                    if v2 != inner_of[r2] or f2 not in faces2:
                        raise ArcsDoNotClose(
                            "no continuing arc in cusp triangle (%d, %d)"
                            % (t2, v2))
                    r, f_in = r2, f2
                    if (r, f_in) == state:
                        break
                y = cusp.cycle_coords(0, weights)
                curves.append(cusp.coords_in_basis(0, y_m, y_l, y))
        annuli.append(VerticalAnnulus(list(cycle), curves))
        all_classes.extend(curves)

    persistent = all(c != (0, 0) for c in all_classes) and all(
        a[0] * b[1] - a[1] * b[0] == 0
        for i, a in enumerate(all_classes) for b in all_classes[i + 1:])
    degeneracy = None
    if persistent and all_classes:
        degeneracy = _normalize_slope(*all_classes[0])
    return AnnulusAnalysis(annuli, persistent, degeneracy)


def persistent_orientations(tri):
    """Yield (orientation, analysis) for each persistently foliar one.

    Sink-edge orientations are skipped rather than reported, since the
    trace is undefined for them.
    """
    cusp = CuspComplex(tri)
    for mu in enumerate_acyclic(tri):
        try:
            analysis = cusp_annuli(tri, mu, cusp=cusp)
        except SinkEdgePresent:
            continue
        if analysis.persistent:
            yield mu, analysis


def find_persistent(tri):
    """First persistently foliar orientation with its analysis, or None."""
    for mu, analysis in persistent_orientations(tri):
        return mu, analysis
    return None
