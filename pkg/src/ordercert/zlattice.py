"""Exact integer linear algebra: column Hermite form and image membership.

Both coboundary tests in this package reduce to the same question: does
M x = b have an integer solution?  Column HNF answers it by forward
substitution on the echelon pivots, and the unimodular column record U
turns a solution of H y = b back into one of M x = b.
"""

from __future__ import annotations

from .errors import DimensionMismatch


class IntMatrix:
    """Dense matrix of exact integers, row-major list of lists."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows=None, cols=None):
        if rows is None:
            rows = len(data)
            cols = len(data[0]) if rows else 0
        self.rows = rows
        self.cols = cols
        self.data = [[int(x) for x in row] for row in data]
        for row in self.data:
            if len(row) != cols:
                raise DimensionMismatch("ragged rows in integer matrix")

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.data == other.data

    def __repr__(self):
        return "IntMatrix(%r)" % (self.data,)

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def mul_vector(self, x):
        if len(x) != self.cols:
            raise DimensionMismatch(
                "vector length %d against %d columns" % (len(x), self.cols))
        return [sum(self.data[i][j] * x[j] for j in range(self.cols))
                for i in range(self.rows)]

    def mul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch("matrix product shape mismatch")
        out = IntMatrix.zero(self.rows, other.cols)
        for i in range(self.rows):
            row = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                a = row[k]
                if a:
                    brow = other.data[k]
                    for j in range(other.cols):
                        orow[j] += a * brow[j]
        return out

    def copy(self):
        return IntMatrix([row[:] for row in self.data], self.rows, self.cols)

    def transpose(self):
        return IntMatrix([[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)], self.cols, self.rows)

    @classmethod
    def from_columns(cls, columns, rows):
        """Build a matrix from a list of column vectors."""
        for col in columns:
            if len(col) != rows:
                raise DimensionMismatch("column length %d, expected %d"
                                        % (len(col), rows))
        return cls([[col[i] for col in columns] for i in range(rows)],
                   rows, len(columns))


def hermite_normal_form(M):
    """Column HNF: returns (H, U) with H = M U, U unimodular.

    H is lower column echelon with positive pivots; in each pivot row
    the entries left of the pivot are reduced into [0, pivot) and the
    entries right of it are zero.  Zero columns are pushed to the right,
    so the leading columns are a basis of the column space and the
    trailing columns of U a basis of ker M.
    """
    H = M.copy()
    n, m = H.rows, H.cols
    U = IntMatrix.identity(m)
    hd, ud = H.data, U.data

    def col_addmul(dst, src, q):
        # column_dst += q * column_src, in both H and U
        if q == 0:
            return
        for i in range(n):
            hd[i][dst] += q * hd[i][src]
        for i in range(m):
            ud[i][dst] += q * ud[i][src]

    def col_swap(a, b):
        if a == b:
            return
        for i in range(n):
            hd[i][a], hd[i][b] = hd[i][b], hd[i][a]
        for i in range(m):
            ud[i][a], ud[i][b] = ud[i][b], ud[i][a]

    def col_negate(j):
        for i in range(n):
            hd[i][j] = -hd[i][j]
        for i in range(m):
            ud[i][j] = -ud[i][j]

    pivot_col = 0
    for row in range(n):
        if pivot_col >= m:
            break
        # euclidean elimination across columns pivot_col..m-1 in this row
        while True:
            nonzero = [j for j in range(pivot_col, m) if hd[row][j] != 0]
            if not nonzero:
                break
            jmin = min(nonzero, key=lambda j: abs(hd[row][j]))
            col_swap(pivot_col, jmin)
            if hd[row][pivot_col] < 0:
                col_negate(pivot_col)
            done = True
            p = hd[row][pivot_col]
            for j in range(pivot_col + 1, m):
                q = hd[row][j] // p
                col_addmul(j, pivot_col, -q)
                if hd[row][j] != 0:
                    done = False
            if done:
                break
        if pivot_col < m and hd[row][pivot_col] != 0:
            # reduce earlier columns of this row into [0, pivot)
            p = hd[row][pivot_col]
            for j in range(pivot_col):
                q = hd[row][j] // p
                col_addmul(j, pivot_col, -q)
            pivot_col += 1
    return H, U


def kernel_basis(M):
    """Columns of U over the zero columns of H: a basis of ker M over Z."""
    H, U = hermite_normal_form(M)
    out = []
    for j in range(H.cols):
        if all(H.data[i][j] == 0 for i in range(H.rows)):
            out.append(U.column(j))
    return out


def solve_in_image(M, b):
    """Integer x with M x = b, or None.  The witness is re-verified."""
    if len(b) != M.rows:
        raise DimensionMismatch(
            "vector length %d against %d rows" % (len(b), M.rows))
    b = [int(v) for v in b]
    H, U = hermite_normal_form(M)
    n, m = H.rows, H.cols
    # forward substitution against the echelon columns
    y = [0] * m
    residual = b[:]
    col = 0
    pivots = []
    for row in range(n):
        if col < m and H.data[row][col] != 0:
            pivots.append((row, col))
            col += 1
    for row, col in pivots:
        r = residual[row]
        p = H.data[row][col]
        if r % p != 0:
            return None
        q = r // p
        y[col] = q
        if q:
            for i in range(n):
                residual[i] -= q * H.data[i][col]
    if any(residual):
        return None
    x = U.mul_vector(y)
    if M.mul_vector(x) != b:
        raise AssertionError("HNF solver produced an invalid witness")
    return x
