import itertools
import random

import pytest

from ordercert.errors import DimensionMismatch
from ordercert.zlattice import (
    IntMatrix,
    hermite_normal_form,
    kernel_basis,
    solve_in_image,
)


def is_unimodular(U):
    # columns span all of Z^n exactly when the column HNF is the identity
    H, _ = hermite_normal_form(U)
    return H == IntMatrix.identity(U.rows)


class TestHermite:
    def test_identity(self):
        M = IntMatrix.identity(3)
        H, U = hermite_normal_form(M)
        assert H == M
        assert U == M

    def test_hand_reduction(self):
        M = IntMatrix([[2, 4], [0, 2]])
        H, U = hermite_normal_form(M)
        assert H == IntMatrix([[2, 0], [0, 2]])
        assert M.mul(U) == H

    def test_zero_matrix(self):
        M = IntMatrix.zero(2, 3)
        H, U = hermite_normal_form(M)
        assert H == IntMatrix.zero(2, 3)
        assert M.mul(U) == H

    def test_random_factorization_and_shape(self):
        rng = random.Random(17)
        for _ in range(150):
            n = rng.randint(1, 5)
            m = rng.randint(1, 5)
            M = IntMatrix([[rng.randint(-9, 9) for _ in range(m)]
                           for _ in range(n)])
            H, U = hermite_normal_form(M)
            assert M.mul(U) == H
            assert is_unimodular(U)
            # echelon shape: each column's topmost nonzero strictly descends
            tops = []
            for j in range(m):
                col = H.column(j)
                nz = [i for i, v in enumerate(col) if v != 0]
                if nz:
                    assert H.data[nz[0]][j] > 0
                    tops.append((nz[0], j))
            rows_seen = [r for r, _ in tops]
            assert rows_seen == sorted(rows_seen)
            for idx in range(1, len(tops)):
                assert tops[idx][0] > tops[idx - 1][0]

    def test_kernel_basis_annihilates(self):
        rng = random.Random(23)
        for _ in range(60):
            M = IntMatrix([[rng.randint(-6, 6) for _ in range(4)]
                           for _ in range(2)])
            for v in kernel_basis(M):
                assert M.mul_vector(v) == [0, 0]


class TestSolveInImage:
    def test_doubled_identity(self):
        M = IntMatrix([[2, 0], [0, 2]])
        assert solve_in_image(M, [2, 2]) == [1, 1]
        assert solve_in_image(M, [1, 0]) is None

    def test_direct_example(self):
        M = IntMatrix([[1, 2], [3, 4]])
        x = solve_in_image(M, [5, 11])
        assert x is not None
        assert M.mul_vector(x) == [5, 11]

    def test_dimension_mismatch(self):
        M = IntMatrix([[1, 2], [3, 4]])
        with pytest.raises(DimensionMismatch):
            solve_in_image(M, [1, 2, 3])

    def test_roundtrip_witness(self):
        rng = random.Random(31)
        for _ in range(200):
            n, m = rng.randint(1, 4), rng.randint(1, 5)
            M = IntMatrix([[rng.randint(-8, 8) for _ in range(m)]
                           for _ in range(n)])
            x0 = [rng.randint(-5, 5) for _ in range(m)]
            b = M.mul_vector(x0)
            x = solve_in_image(M, b)
            assert x is not None
            assert M.mul_vector(x) == b

    def test_brute_force_agreement(self):
        import numpy as np

        grid = np.array(list(itertools.product(range(-10, 11), repeat=4)),
                        dtype=np.int64)
        rng = random.Random(41)
        for _ in range(40):
            M = IntMatrix([[rng.randint(-3, 3) for _ in range(4)]
                           for _ in range(3)])
            if rng.random() < 0.5:
                x0 = [rng.randint(-3, 3) for _ in range(4)]
                b = M.mul_vector(x0)
            else:
                b = [rng.randint(-6, 6) for _ in range(3)]
            x = solve_in_image(M, b)
            hits = (grid @ np.array(M.data, dtype=np.int64).T
                    == np.array(b, dtype=np.int64)).all(axis=1)
            if hits.any():
                assert x is not None and M.mul_vector(x) == b
            elif x is not None:
                # solver may find witnesses outside the brute-force window,
                # but they must still verify
                assert M.mul_vector(x) == b
