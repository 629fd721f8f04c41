"""
Exact rational matrices: symmetric inertia by congruence, rank and nullspace.

Entries are fractions.Fraction, which is always reduced with a positive
denominator, so no rounding ever happens here.
"""

from fractions import Fraction

import numpy as np

from graph_core import PreconditionError


class RationalMatrix:
    """Dense matrix of Fractions."""

    def __init__(self, rows):
        rows = [[Fraction(x) for x in row] for row in rows]
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise PreconditionError("ragged matrix rows")
        self.entries = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        matrix = cls([])
        matrix.entries = [[Fraction(0)] * cols for _ in range(rows)]
        matrix.rows, matrix.cols = rows, cols
        return matrix

    @classmethod
    def identity(cls, n):
        matrix = cls.zeros(n)
        for i in range(n):
            matrix.entries[i][i] = Fraction(1)
        return matrix

    @classmethod
    def diagonal(cls, values):
        matrix = cls.zeros(len(values))
        for i, x in enumerate(values):
            matrix.entries[i][i] = Fraction(x)
        return matrix

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def __setitem__(self, index, value):
        i, j = index
        self.entries[i][j] = Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.entries == other.entries

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise PreconditionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = list(zip(*other.entries))
        return RationalMatrix([[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in columns]
                               for row in self.entries])

    def transpose(self):
        matrix = RationalMatrix.zeros(self.cols, self.rows)
        matrix.entries = [list(col) for col in zip(*self.entries)] if self.rows else []
        return matrix

    def copy(self):
        matrix = RationalMatrix.zeros(self.rows, self.cols)
        matrix.entries = [list(row) for row in self.entries]
        return matrix

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square() and all(self.entries[i][j] == self.entries[j][i]
                                        for i in range(self.rows) for j in range(i + 1, self.rows))

    def to_numpy(self):
        return np.array([[float(x) for x in row] for row in self.entries], dtype=float).reshape(self.rows, self.cols)

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in row] for row in self.entries]})"


def inertia(m):
    """(negative, zero, positive) eigenvalue counts, by symmetric elimination."""
    if not m.is_symmetric():
        raise PreconditionError("inertia needs a symmetric matrix")
    a = [list(row) for row in m.entries]
    active = list(range(m.rows))
    neg = zero = pos = 0
    while active:
        pivot = next((i for i in active if a[i][i] != 0), None)
        if pivot is not None:
            d = a[pivot][pivot]
            if d < 0:
                neg += 1
            else:
                pos += 1
            active.remove(pivot)
            for j in active:
                if a[j][pivot] == 0:
                    continue
                factor = a[j][pivot] / d
                for k in active:
                    a[j][k] -= factor * a[pivot][k]
            continue

        pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
        if pair is None:
            zero += len(active)
            break
        # [[0, b], [b, 0]] has one eigenvalue of each sign
        i, j = pair
        b = a[i][j]
        neg += 1
        pos += 1
        active.remove(i)
        active.remove(j)
        for k in active:
            for l in active:
                a[k][l] -= (a[k][i] * a[j][l] + a[k][j] * a[i][l]) / b
    return neg, zero, pos


def _row_echelon(m):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [list(row) for row in m.entries]
    pivots = []
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        scale = a[r][c]
        a[r] = [x / scale for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rank(m):
    return len(_row_echelon(m)[1])


def corank(m):
    if not m.is_square():
        raise PreconditionError("corank needs a square matrix")
    return m.rows - rank(m)


def nullspace_dimension(a):
    """Dimension of the solution space of a.x = 0."""
    return a.cols - rank(a)


def nullspace(a):
    """A basis of {x : a.x = 0}, one vector per free column."""
    reduced, pivots = _row_echelon(a)
    free = [c for c in range(a.cols) if c not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * a.cols
        vector[f] = Fraction(1)
        for row, c in zip(reduced, pivots):
            vector[c] = -row[f]
        basis.append(vector)
    return basis


def determinant(m):
    if not m.is_square():
        raise PreconditionError("determinant needs a square matrix")
    a = [list(row) for row in m.entries]
    n = m.rows
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                factor = a[i][c] / a[c][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[c])]
    return det
