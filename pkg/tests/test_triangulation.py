"""Gluing validation, orbit structure, and cusp homology."""

import copy
import json
import random
from pathlib import Path

import pytest

from ordercert.cusp import CuspComplex, SpineHomology, homological_longitude
from ordercert.errors import (
    BadGluingData,
    EdgeReversedOntoItself,
    InputError,
    MissingPeripheralData,
    NonOrientable,
    NotClosedOrIdeal,
    NotRationalHomologySolidTorus,
    ParseError,
)
from ordercert.triangulation import Triangulation, perm_inverse

FIXTURES = Path(__file__).parent / "fixtures"


def load_fig8():
    return Triangulation.load(FIXTURES / "fig8.json")


# the other two-tetrahedron valence-[6,6] census triangulation; its
# first homology has a Z/5 summand, unlike the knot complement
SISTER = [[[1, [0, 1, 3, 2]], [1, [2, 1, 0, 3]], [1, [0, 3, 2, 1]], [1, [1, 0, 2, 3]]],
          [[0, [0, 1, 3, 2]], [0, [2, 1, 0, 3]], [0, [0, 3, 2, 1]], [0, [1, 0, 2, 3]]]]

# single tetrahedron, faces 0-1 and 2-3 glued: a closed one-vertex example
ONE_TET_CLOSED = [[[0, [1, 0, 2, 3]], [0, [1, 0, 2, 3]],
                   [0, [1, 2, 3, 0]], [0, [3, 0, 1, 2]]]]


class TestValidation:
    def test_empty(self):
        with pytest.raises(BadGluingData):
            Triangulation([])

    def test_short_row(self):
        with pytest.raises(BadGluingData):
            Triangulation([[(0, (1, 0, 2, 3))] * 3])

    def test_bad_permutation(self):
        row = [(0, (1, 1, 2, 3))] * 4
        with pytest.raises(BadGluingData):
            Triangulation([row])

    def test_target_out_of_range(self):
        row = [(2, (1, 0, 2, 3))] * 4
        with pytest.raises(BadGluingData):
            Triangulation([row])

    def test_face_glued_to_itself(self):
        # permutation fixing the face index glues the face to itself
        row = [(0, (0, 1, 2, 3))] * 4
        with pytest.raises(BadGluingData):
            Triangulation([row])

    def test_involution_broken(self):
        tri = load_fig8()
        gl = [[list(x) for x in row] for row in tri.gluings]
        gl[0][1] = (1, (2, 1, 3, 0))
        with pytest.raises(BadGluingData):
            Triangulation(gl)

    def test_edge_reversed(self):
        p, q = (1, 0, 2, 3), (0, 2, 3, 1)
        gl = [[(0, p), (0, perm_inverse(p)), (0, q), (0, perm_inverse(q))]]
        with pytest.raises(EdgeReversedOntoItself):
            Triangulation(gl)

    def test_non_orientable(self):
        p, q = (1, 2, 0, 3), (0, 2, 3, 1)
        gl = [[(0, p), (0, perm_inverse(p)), (0, q), (0, perm_inverse(q))]]
        with pytest.raises(NonOrientable):
            Triangulation(gl)

    def test_higher_genus_link(self):
        gl = [[(1, (0, 1, 3, 2)), (0, (1, 2, 3, 0)), (0, (3, 0, 1, 2)), (1, (0, 3, 2, 1))],
              [(0, (0, 1, 3, 2)), (0, (0, 3, 2, 1)), (1, (1, 2, 3, 0)), (1, (3, 0, 1, 2))]]
        with pytest.raises(NotClosedOrIdeal):
            Triangulation(gl)

    def test_bad_json(self, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            Triangulation.load(path)
        path.write_text(json.dumps({"tets": 3}))
        with pytest.raises(ParseError):
            Triangulation.load(path)


class TestFig8:
    def test_describe(self):
        tri = load_fig8()
        d = tri.describe()
        assert d["kind"] == "ideal"
        assert d["edge_classes"] == 2
        assert d["vertex_classes"] == 1
        assert d["faces"] == 4
        assert d["edge_valences"] == [6, 6]
        assert d["link_euler"] == [0]

    def test_walks_close_with_consistent_signs(self):
        tri = load_fig8()
        for idx, cls in enumerate(tri.edge_classes):
            steps = list(tri.walk_edge_class(idx))
            assert len(steps) == 6
            for (t, (a, b), f_in, f_out) in steps:
                key = (t, (a, b) if a < b else (b, a))
                assert tri.edge_class_of[key] == idx
                want = 1 if a < b else -1
                assert tri.edge_sign_of[key] == want
                assert f_in not in (a, b) and f_out not in (a, b)
                assert f_in != f_out

    def test_side_classes_pair_up(self):
        tri = load_fig8()
        assert len(tri.side_classes) == 12
        for (t, v, f), (t2, v2, f2) in tri.side_classes:
            tt, p = tri.gluings[t][f]
            assert (tt, p[v], p[f]) == (t2, v2, f2)

    def test_serialization_roundtrip(self):
        tri = load_fig8()
        again = Triangulation.from_data(tri.to_data())
        assert again.to_data() == tri.to_data()
        assert again.peripheral == tri.peripheral

    def test_peripheral_antisymmetry_enforced(self):
        tri = load_fig8()
        data = tri.to_data()
        bad = copy.deepcopy(data)
        (t, v, f), _ = tri.side_classes[0]
        bad["peripheral"]["meridian"][t][v][f] += 1
        with pytest.raises(ParseError):
            Triangulation.from_data(bad)

    def test_peripheral_triangle_sum_enforced(self):
        tri = load_fig8()
        data = tri.to_data()
        bad = copy.deepcopy(data)
        # adjust a whole side class consistently; triangle sums then break
        (t, v, f), (t2, v2, f2) = tri.side_classes[0]
        bad["peripheral"]["meridian"][t][v][f] += 1
        bad["peripheral"]["meridian"][t2][v2][f2] -= 1
        with pytest.raises(ParseError):
            Triangulation.from_data(bad)

    def test_peripheral_diagonal_enforced(self):
        tri = load_fig8()
        data = tri.to_data()
        bad = copy.deepcopy(data)
        bad["peripheral"]["longitude"][0][1][1] = 2
        with pytest.raises(ParseError):
            Triangulation.from_data(bad)

    def test_peripheral_missing_piece(self):
        tri = load_fig8()
        data = tri.to_data()
        del data["peripheral"]["longitude"]
        with pytest.raises(MissingPeripheralData):
            Triangulation.from_data(data)

    def test_peripheral_rejected_on_closed(self):
        tri = Triangulation(ONE_TET_CLOSED)
        assert tri.kind == "closed"
        with pytest.raises(MissingPeripheralData):
            tri.set_peripheral({"meridian": [], "longitude": []})


class TestCuspHomology:
    def test_peripheral_is_basis(self):
        tri = load_fig8()
        cusp = CuspComplex(tri)
        (ym, yl), = cusp.peripheral_coords()
        assert cusp.coords_in_basis(0, ym, yl, ym) == (1, 0)
        assert cusp.coords_in_basis(0, ym, yl, yl) == (0, 1)

    def test_coordinates_are_linear(self):
        tri = load_fig8()
        cusp = CuspComplex(tri)
        (ym, yl), = cusp.peripheral_coords()
        rng = random.Random(7)
        for _ in range(50):
            p = rng.randrange(-9, 10)
            q = rng.randrange(-9, 10)
            y = [p * a + q * b for a, b in zip(ym, yl)]
            assert cusp.coords_in_basis(0, ym, yl, y) == (p, q)

    def test_triviality(self):
        tri = load_fig8()
        cusp = CuspComplex(tri)
        (ym, yl), = cusp.peripheral_coords()
        zero = [0] * len(ym)
        assert cusp.is_trivial(0, zero)
        assert not cusp.is_trivial(0, ym)
        assert not cusp.is_trivial(0, yl)
        loc = cusp._local[0]
        for j in range(loc["C"].cols):
            assert cusp.is_trivial(0, loc["C"].column(j))

    def test_weights_roundtrip(self):
        tri = load_fig8()
        cusp = CuspComplex(tri)
        (ym, yl), = cusp.peripheral_coords()
        w = cusp.weights_from_coords(0, ym)
        assert cusp.cycle_coords(0, w) == ym

    def test_spine_homology_distinguishes_census_pair(self):
        assert SpineHomology(load_fig8()).free_rank == 1
        assert SpineHomology(load_fig8()).torsion_order == 1
        sister = SpineHomology(Triangulation(SISTER))
        assert sister.free_rank == 1
        assert sister.torsion_order == 5

    def test_homological_longitude(self):
        assert homological_longitude(load_fig8()) == (0, 1)

    def test_homological_longitude_swapped_basis(self):
        tri = load_fig8()
        data = tri.to_data()
        m = data["peripheral"]["meridian"]
        data["peripheral"]["meridian"] = data["peripheral"]["longitude"]
        data["peripheral"]["longitude"] = m
        assert homological_longitude(Triangulation.from_data(data)) == (1, 0)

    def test_homological_longitude_requires_peripheral(self):
        tri = Triangulation(load_fig8().gluings)
        with pytest.raises(MissingPeripheralData):
            homological_longitude(tri)

    def test_homological_longitude_needs_cusp(self):
        # closed: links are spheres, there is no cusp at all
        tri = Triangulation(ONE_TET_CLOSED)
        with pytest.raises(NotRationalHomologySolidTorus):
            homological_longitude(tri)

    def test_degenerate_basis_rejected(self):
        tri = load_fig8()
        data = tri.to_data()
        data["peripheral"]["longitude"] = copy.deepcopy(
            data["peripheral"]["meridian"])
        broken = Triangulation.from_data(data)
        with pytest.raises(InputError):
            homological_longitude(broken)
