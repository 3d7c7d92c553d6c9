"""Vertical annulus tracing and persistently foliar search."""

from pathlib import Path

import pytest

from ordercert.cusp import CuspComplex, homological_longitude
from ordercert.errors import (
    InputError,
    MissingPeripheralData,
    NotAcyclic,
    SinkEdgePresent,
)
from ordercert.orientations import EdgeOrientation, enumerate_acyclic
from ordercert.persistent import (
    cusp_annuli,
    find_persistent,
    persistent_orientations,
)
from ordercert.triangulation import Triangulation

from test_orientations import ONE_TET_CLOSED, first_cyclic_bits

FIXTURES = Path(__file__).parent / "fixtures"


def load(name):
    return Triangulation.load(FIXTURES / name)


def assert_rectangle_partition(tri, analysis):
    used = sorted(r for a in analysis.annuli for r in a.rectangles)
    assert used == list(range(len(tri.face_classes)))


class TestKnotComplement:
    def test_all_orientations_trace(self):
        tri = load("fig8.json")
        seen = 0
        for mu in enumerate_acyclic(tri):
            an = cusp_annuli(tri, mu)
            seen += 1
            assert sorted(len(a.rectangles) for a in an.annuli) == [2, 2]
            assert_rectangle_partition(tri, an)
            classes = [c for a in an.annuli for c in a.curves]
            assert len(classes) == 2
            assert all(c in ((1, 1), (-1, -1)) for c in classes)
            assert an.persistent
            assert an.degeneracy == (1, 1)
        assert seen == 4

    def test_search_yields_every_orientation(self):
        tri = load("fig8.json")
        hits = list(persistent_orientations(tri))
        assert len(hits) == 4
        assert len({mu.bits for mu, _ in hits}) == 4

    def test_degeneracy_differs_from_longitude(self):
        tri = load("fig8.json")
        mu, an = find_persistent(tri)
        assert an.degeneracy != homological_longitude(tri)

    def test_shared_cusp_complex_gives_same_answer(self):
        tri = load("fig8.json")
        cusp = CuspComplex(tri)
        for mu in enumerate_acyclic(tri):
            a = cusp_annuli(tri, mu)
            b = cusp_annuli(tri, mu, cusp=cusp)
            assert a.degeneracy == b.degeneracy
            assert [x.rectangles for x in a.annuli] == [x.rectangles for x in b.annuli]


class TestBundleFamily:
    # layered one-cusped bundles: the annulus count stays at two, each
    # annulus crosses every tetrahedron once, and the degeneracy slope
    # depends on the monodromy
    CASES = [
        ("bundle_rrll.json", 4, (1, -1)),
        ("bundle_rlrl.json", 4, (1, 0)),
        ("bundle_rrllll.json", 6, (1, -1)),
        ("bundle_rrllrrll.json", 8, (1, -1)),
    ]

    @pytest.mark.parametrize("name, n, degen", CASES)
    def test_family(self, name, n, degen):
        tri = load(name)
        assert tri.n == n
        seen = 0
        for mu in enumerate_acyclic(tri):
            an = cusp_annuli(tri, mu)
            seen += 1
            assert sorted(len(a.rectangles) for a in an.annuli) == [n, n]
            assert_rectangle_partition(tri, an)
            classes = [c for a in an.annuli for c in a.curves]
            assert len(classes) == 2
            assert all(c in (degen, (-degen[0], -degen[1])) for c in classes)
            assert an.persistent
            assert an.degeneracy == degen
        assert seen == 4
        assert homological_longitude(tri) == (0, 1)

    @pytest.mark.parametrize("name, n, degen", CASES)
    def test_search_agrees(self, name, n, degen):
        mu, an = find_persistent(load(name))
        assert an.degeneracy == degen


class TestLongitudinalDegeneracy:
    # four-tetrahedron census manifold whose persistent orientation
    # degenerates along the homological longitude itself
    def test_search_lands_on_longitude(self):
        tri = load("m137.json")
        assert tri.n == 4
        best = find_persistent(tri)
        assert best is not None
        mu, an = best
        assert an.persistent
        assert an.degeneracy == homological_longitude(tri) == (0, 1)
        assert sorted(len(a.rectangles) for a in an.annuli) == [3, 5]
        assert_rectangle_partition(tri, an)


class TestDegeneracySlopeShape:
    def test_primitive_and_sign_normalized(self):
        for name in ("fig8.json", "bundle_rrll.json", "bundle_rlrl.json"):
            _, an = find_persistent(load(name))
            p, q = an.degeneracy
            from math import gcd
            assert gcd(p, q) == 1
            assert p > 0 or (p == 0 and q > 0)


class TestRefusals:
    def test_closed_input(self):
        tri = Triangulation(ONE_TET_CLOSED)
        mu = next(iter(enumerate_acyclic(tri)))
        with pytest.raises(InputError):
            cusp_annuli(tri, mu)

    def test_missing_peripheral(self):
        bare = Triangulation(load("fig8.json").gluings)
        mu = next(iter(enumerate_acyclic(bare)))
        with pytest.raises(MissingPeripheralData):
            cusp_annuli(bare, mu)

    def test_cyclic_orientation(self):
        tri = load("bundle_rrll.json")
        bad = EdgeOrientation(first_cyclic_bits(tri))
        with pytest.raises(NotAcyclic):
            cusp_annuli(tri, bad)

    def test_sink_orientation(self):
        # both acyclic orientations of this census class direct every
        # slot of one edge very-long
        tri = load("ideal2_sink.json")
        for mu in enumerate_acyclic(tri):
            with pytest.raises(SinkEdgePresent):
                cusp_annuli(tri, mu)

    def test_sink_orientations_skipped_by_search(self):
        assert find_persistent(load("ideal2_sink.json")) is None

    def test_no_acyclic_orientation_means_no_hit(self):
        assert find_persistent(load("sister.json")) is None
