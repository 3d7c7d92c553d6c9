"""Acyclic orientation enumeration, edge roles, foliar verdicts, pillows."""

import itertools
import json
from collections import Counter
from pathlib import Path

import pytest

from ordercert.errors import InputError, InvalidSite, NotAcyclic
from ordercert.orientations import (
    ROLE_MIXED,
    ROLE_SHORT_BOTTOM,
    ROLE_SHORT_INCOMPAT,
    ROLE_SHORT_TOP,
    ROLE_VERY_LONG,
    EdgeOrientation,
    classify_edges,
    enumerate_acyclic,
    face_relation,
    is_foliar,
    pillow_move,
)
from ordercert.triangulation import EDGE_COFACES, EDGES, Triangulation

FIXTURES = Path(__file__).parent / "fixtures"

ONE_TET_CLOSED = [[[0, [1, 0, 2, 3]], [0, [1, 0, 2, 3]],
                   [0, [1, 2, 3, 0]], [0, [3, 0, 1, 2]]]]

SISTER = [[[1, [0, 1, 3, 2]], [1, [2, 1, 0, 3]], [1, [0, 3, 2, 1]], [1, [1, 0, 2, 3]]],
          [[0, [0, 1, 3, 2]], [0, [2, 1, 0, 3]], [0, [0, 3, 2, 1]], [0, [1, 0, 2, 3]]]]

# three-torus from the six-tetrahedron decomposition of the unit cube
T3 = [[[3, [3, 0, 1, 2]], [2, [0, 1, 2, 3]], [1, [0, 1, 2, 3]], [4, [1, 2, 3, 0]]],
      [[5, [3, 0, 1, 2]], [4, [0, 1, 2, 3]], [0, [0, 1, 2, 3]], [2, [1, 2, 3, 0]]],
      [[1, [3, 0, 1, 2]], [0, [0, 1, 2, 3]], [3, [0, 1, 2, 3]], [5, [1, 2, 3, 0]]],
      [[4, [3, 0, 1, 2]], [5, [0, 1, 2, 3]], [2, [0, 1, 2, 3]], [0, [1, 2, 3, 0]]],
      [[0, [3, 0, 1, 2]], [1, [0, 1, 2, 3]], [5, [0, 1, 2, 3]], [3, [1, 2, 3, 0]]],
      [[2, [3, 0, 1, 2]], [3, [0, 1, 2, 3]], [4, [0, 1, 2, 3]], [1, [1, 2, 3, 0]]]]


def load(name):
    return Triangulation.load(FIXTURES / name)


def brute_force_acyclic(tri):
    """All orientations with no directed face cycle, straight from the
    definition: for each tetrahedron face, ascending arrows around its
    three edges must not close up."""
    out = []
    for bits in itertools.product((0, 1), repeat=len(tri.edge_classes)):
        mu = EdgeOrientation(bits)
        ok = True
        for t in range(tri.n):
            for f in range(4):
                i, j, k = [v for v in range(4) if v != f]
                aij = mu.ascending(tri, t, (i, j))
                ajk = mu.ascending(tri, t, (j, k))
                aik = mu.ascending(tri, t, (i, k))
                if aij == ajk and aik != aij:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(bits)
    return out


def first_cyclic_bits(tri):
    acyclic = set(brute_force_acyclic(tri))
    for bits in itertools.product((0, 1), repeat=len(tri.edge_classes)):
        if bits not in acyclic:
            return bits
    raise AssertionError("every orientation of this fixture is acyclic")


class TestEdgeOrientation:
    def test_bit_validation(self):
        with pytest.raises(InputError):
            EdgeOrientation((0, 2))

    def test_flip_involution(self):
        mu = EdgeOrientation((0, 1, 1, 0))
        assert mu.flipped().flipped() == mu
        assert mu.flipped().bits == (1, 0, 0, 1)

    def test_directions_round_trip(self):
        mu = EdgeOrientation((0, 1, 0))
        assert mu.directions() == [1, -1, 1]
        assert EdgeOrientation.from_directions([1, -1, 1]) == mu
        with pytest.raises(InputError):
            EdgeOrientation.from_directions([1, 0])

    def test_hashable(self):
        assert len({EdgeOrientation((0, 1)), EdgeOrientation((0, 1)),
                    EdgeOrientation((1, 0))}) == 2

    def test_flip_reverses_every_arrow(self):
        tri = load("fig8.json")
        mu = EdgeOrientation((0, 1))
        nu = mu.flipped()
        for t in range(tri.n):
            for e in EDGES:
                assert mu.ascending(tri, t, e) != nu.ascending(tri, t, e)

    def test_ascending_ignores_vertex_order(self):
        tri = load("fig8.json")
        mu = EdgeOrientation((0, 1))
        for t in range(tri.n):
            for (i, j) in EDGES:
                assert mu.ascending(tri, t, (i, j)) == mu.ascending(tri, t, (j, i))


class TestEnumeration:
    @pytest.mark.parametrize("table, count", [
        (ONE_TET_CLOSED, 2),
        (SISTER, 0),
        (T3, 32),
    ])
    def test_matches_brute_force_inline(self, table, count):
        tri = Triangulation(table)
        got = [mu.bits for mu in enumerate_acyclic(tri)]
        assert len(got) == len(set(got)), "an orientation was emitted twice"
        assert sorted(got) == sorted(brute_force_acyclic(tri))
        assert len(got) == count

    @pytest.mark.parametrize("name, count", [
        ("fig8.json", 4),
        ("bundle_rrll.json", 4),
        ("bundle_rlrl.json", 4),
        ("bundle_rrllll.json", 4),
    ])
    def test_matches_brute_force_fixture(self, name, count):
        tri = load(name)
        got = [mu.bits for mu in enumerate_acyclic(tri)]
        assert len(got) == len(set(got))
        assert sorted(got) == sorted(brute_force_acyclic(tri))
        assert len(got) == count

    def test_closed_under_global_flip(self):
        tri = Triangulation(T3)
        got = {mu.bits for mu in enumerate_acyclic(tri)}
        for bits in got:
            assert EdgeOrientation(bits).flipped().bits in got


class TestClassification:
    ROLE_CENSUS = {ROLE_VERY_LONG: 1, ROLE_MIXED: 2, ROLE_SHORT_BOTTOM: 1,
                   ROLE_SHORT_TOP: 1, ROLE_SHORT_INCOMPAT: 1}

    @pytest.mark.parametrize("table", [ONE_TET_CLOSED, T3])
    def test_roles_per_tetrahedron(self, table):
        tri = Triangulation(table)
        for mu in enumerate_acyclic(tri):
            cls = classify_edges(tri, mu)
            for t in range(tri.n):
                roles = cls.roles_in_tet(t)
                assert Counter(roles.values()) == self.ROLE_CENSUS

    def test_positions_and_vertex_order(self):
        tri = load("fig8.json")
        for mu in enumerate_acyclic(tri):
            cls = classify_edges(tri, mu)
            for t in range(tri.n):
                pos = cls.position[t]
                assert sorted(pos) == [0, 1, 2, 3]
                va = cls.vertex_at[t]
                for v in range(4):
                    assert va[pos[v]] == v

    def test_short_edges_have_short_roles(self):
        tri = Triangulation(T3)
        for mu in enumerate_acyclic(tri):
            cls = classify_edges(tri, mu)
            for t in range(tri.n):
                bottom, top = cls.short_edges(t)
                assert cls.role_of[(t, bottom)] == ROLE_SHORT_BOTTOM
                assert cls.role_of[(t, top)] == ROLE_SHORT_TOP

    def test_mixed_slot_total(self):
        # two mixed edge slots per tetrahedron, however they distribute
        tri = Triangulation(T3)
        for mu in enumerate_acyclic(tri):
            cls = classify_edges(tri, mu)
            assert sum(cls.mixed_count) == 2 * tri.n

    def test_every_fig8_orientation_is_acyclic(self):
        # two edge classes, and all four assignments order both tetrahedra
        tri = load("fig8.json")
        assert len(brute_force_acyclic(tri)) == 4

    def test_not_acyclic_raises(self):
        tri = Triangulation(T3)
        bad = EdgeOrientation(first_cyclic_bits(tri))
        with pytest.raises(NotAcyclic):
            classify_edges(tri, bad)

    def test_sink_flags(self):
        tri = Triangulation(ONE_TET_CLOSED)
        flags = [classify_edges(tri, mu).sink for mu in enumerate_acyclic(tri)]
        assert flags == [[False, True], [False, True]]
        tri = load("fig8.json")
        for mu in enumerate_acyclic(tri):
            assert not any(classify_edges(tri, mu).sink)


class TestFaceRelation:
    def test_rectangles_sit_on_short_edges(self):
        tri = load("fig8.json")
        for mu in enumerate_acyclic(tri):
            cls = classify_edges(tri, mu)
            rel = face_relation(tri, cls)
            assert len(rel.rectangles) == 2 * tri.n
            per_tet = Counter()
            for (t, edge, faces) in rel.rectangles:
                per_tet[t] += 1
                assert faces == EDGE_COFACES[edge]
                assert edge in cls.short_edges(t)
                assert rel.together(tri.face_class_of[(t, faces[0])],
                                    tri.face_class_of[(t, faces[1])])
            assert all(per_tet[t] == 2 for t in range(tri.n))

    def test_class_counts(self):
        # the two-tetrahedron knot complement always merges its four
        # face classes into two; the one-tetrahedron closed example
        # merges both of its face classes
        tri = load("fig8.json")
        for mu in enumerate_acyclic(tri):
            rel = face_relation(tri, classify_edges(tri, mu))
            assert rel.class_count == 2
        tri = Triangulation(ONE_TET_CLOSED)
        for mu in enumerate_acyclic(tri):
            rel = face_relation(tri, classify_edges(tri, mu))
            assert rel.class_count == 1


class TestFoliar:
    def test_ideal_input_rejected(self):
        tri = load("fig8.json")
        mu = next(iter(enumerate_acyclic(tri)))
        with pytest.raises(InputError):
            is_foliar(tri, mu)

    def test_cyclic_orientation_verdict(self):
        tri = Triangulation(T3)
        v = is_foliar(tri, EdgeOrientation(first_cyclic_bits(tri)))
        assert not v
        assert v.reason == "orientation is not acyclic"
        assert v.face_class_count is None

    def test_sink_verdicts(self):
        tri = Triangulation(ONE_TET_CLOSED)
        for mu in enumerate_acyclic(tri):
            v = is_foliar(tri, mu)
            assert not v.foliar and v.reason == "sink edge present"

    def test_t3_has_no_foliar_orientation(self):
        # every acyclic orientation of this torus triangulation is
        # blocked by a sink edge
        tri = Triangulation(T3)
        seen = 0
        for mu in enumerate_acyclic(tri):
            v = is_foliar(tri, mu)
            assert not v.foliar and v.reason == "sink edge present"
            seen += 1
        assert seen == 32


class TestPillow:
    def test_site_validation(self):
        tri = Triangulation(ONE_TET_CLOSED)
        with pytest.raises(InvalidSite):
            pillow_move(tri, 1, (0, 1))
        with pytest.raises(InvalidSite):
            pillow_move(tri, 0, (2, 2))
        with pytest.raises(InvalidSite):
            pillow_move(load("fig8.json"), 0, (0, 1))

    @pytest.mark.parametrize("edge", [(2, 3), (0, 2)])
    def test_counts_grow_by_two(self, edge):
        # (2, 3) has its two faces glued to each other, (0, 2) does not;
        # both insertions must produce a valid closed complex
        tri = Triangulation(ONE_TET_CLOSED)
        out = pillow_move(tri, 0, edge)
        assert out.kind == "closed"
        assert out.n == tri.n + 2
        assert len(out.edge_classes) == len(tri.edge_classes) + 2
        assert len(out.vertex_classes) == len(tri.vertex_classes)

    def test_orientation_count_doubles_along_chain(self):
        tri = Triangulation(ONE_TET_CLOSED)
        counts = [sum(1 for _ in enumerate_acyclic(tri))]
        for _ in range(3):
            mu = next(iter(enumerate_acyclic(tri)))
            cls = classify_edges(tri, mu)
            site = next((t, e) for t in range(tri.n) for e in EDGES
                        if cls.role_of[(t, e)] == ROLE_VERY_LONG)
            tri = pillow_move(tri, *site)
            counts.append(sum(1 for _ in enumerate_acyclic(tri)))
        assert counts == [2, 4, 8, 16]
        assert all(b >= 2 * a for a, b in zip(counts, counts[1:]))
        assert counts[3] >= 8 * counts[0]

    def test_t3_pillow(self):
        tri = Triangulation(T3)
        base = sum(1 for _ in enumerate_acyclic(tri))
        mu = next(iter(enumerate_acyclic(tri)))
        cls = classify_edges(tri, mu)
        site = next((t, e) for t in range(tri.n) for e in EDGES
                    if cls.role_of[(t, e)] == ROLE_VERY_LONG)
        out = pillow_move(tri, *site)
        assert out.n == tri.n + 2
        assert len(out.edge_classes) == len(tri.edge_classes) + 2
        grown = sum(1 for _ in enumerate_acyclic(out))
        assert grown >= 2 * base
