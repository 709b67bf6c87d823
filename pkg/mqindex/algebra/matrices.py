# -*- coding: utf-8 -*-
# cython: language_level=3
# Copyright (c) 2024 INSPXRXD
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included
# in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
# IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY
# CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT,
# TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE
# SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
"""
Exact integer matrices and their normal forms.

Entries are Python integers, so no computation here ever overflows.
Smith and Hermite reductions keep the unimodular transformation
matrices alongside the reduced matrix; the Hermite reduction also
records its elementary row operations so callers can replay them on
other objects (for instance as Nielsen moves on generator tuples).
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "IntegerMatrix",
    "RowOperation",
    "SmithDecomposition",
    "HermiteDecomposition",
    "LatticeMembership",
    "snf",
    "hnf",
    "lattice_member",
)

import typing

from mqindex import errors
from mqindex.domain import value_object

_Rows = typing.List[typing.List[int]]


class IntegerMatrix(value_object.ValueObject):
    """
    A dense matrix of arbitrary precision integers.

    Parameters
    ----------
    rows : int
        Number of rows.
    cols : int
        Number of columns.
    entries : Iterable[int]
        Entries in row-major order.

    Raises
    ------
    errors.DimensionMismatchError
        If the number of entries is not ``rows * cols``.
    """

    __value_fields__ = ("rows", "cols", "entries")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: typing.Iterable[int],
    ) -> None:
        values = tuple(int(entry) for entry in entries)
        if rows < 0 or cols < 0 or len(values) != rows * cols:
            raise errors.DimensionMismatchError(
                f"A {rows}x{cols} matrix needs {rows * cols} entries, "
                f"got {len(values)}."
            )

        self.rows = rows
        self.cols = cols
        self.entries: typing.Tuple[int, ...] = values

    @classmethod
    def from_rows(
        cls,
        rows: typing.Sequence[typing.Sequence[int]],
        cols: typing.Optional[int] = None,
    ) -> IntegerMatrix:
        """
        Build a matrix from a list of rows. `cols` is only needed for
        matrices without rows.
        """
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(row) != width for row in rows):
            raise errors.DimensionMismatchError("Rows have different lengths.")

        return cls(len(rows), width, (entry for row in rows for entry in row))

    @classmethod
    def identity(cls, size: int) -> IntegerMatrix:
        return cls(
            size,
            size,
            (int(i == j) for i in range(size) for j in range(size)),
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, (0 for _ in range(rows * cols)))

    def __getitem__(self, index: typing.Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> typing.Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> typing.Tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> _Rows:
        """A fresh mutable copy of the rows."""
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(
            self.cols,
            self.rows,
            (self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise errors.DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} "
                f"by {other.rows}x{other.cols}."
            )

        columns = [other.column(j) for j in range(other.cols)]
        return IntegerMatrix(
            self.rows,
            other.cols,
            (
                sum(a * b for a, b in zip(self.row(i), column))
                for i in range(self.rows)
                for column in columns
            ),
        )

    def apply_left(self, vector: typing.Sequence[int]) -> typing.Tuple[int, ...]:
        """The row vector ``vector · self``."""
        if len(vector) != self.rows:
            raise errors.DimensionMismatchError(
                f"Vector of length {len(vector)} cannot multiply "
                f"a matrix with {self.rows} rows."
            )

        return tuple(
            sum(vector[i] * self[i, j] for i in range(self.rows))
            for j in range(self.cols)
        )

    def determinant(self) -> int:
        """
        Exact determinant by Bareiss fraction-free elimination.

        Raises
        ------
        errors.DimensionMismatchError
            If the matrix is not square.
        """
        if self.rows != self.cols:
            raise errors.DimensionMismatchError(
                f"Determinant of a non-square {self.rows}x{self.cols} matrix."
            )

        a = self.to_rows()
        n = self.rows
        sign, previous = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // previous
            previous = a[k][k]

        return sign * a[n - 1][n - 1] if n else 1

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.determinant()) == 1

    def is_diagonal(self) -> bool:
        return all(
            self[i, j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def __str__(self) -> str:
        return "[" + ", ".join(str(list(self.row(i))) for i in range(self.rows)) + "]"


class RowOperation(value_object.ValueObject):
    """
    An elementary row operation.

    ``swap`` exchanges rows `i` and `j`, ``negate`` multiplies row `i`
    by -1 and ``add`` performs ``row_i += factor * row_j``.
    """

    __value_fields__ = ("kind", "i", "j", "factor")

    def __init__(
        self,
        kind: typing.Literal["swap", "negate", "add"],
        i: int,
        j: int = -1,
        factor: int = 0,
    ) -> None:
        self.kind = kind
        self.i = i
        self.j = j
        self.factor = factor

    def apply(self, rows: typing.MutableSequence[typing.List[int]]) -> None:
        """Perform the operation in place on a list of rows."""
        if self.kind == "swap":
            rows[self.i], rows[self.j] = rows[self.j], rows[self.i]
        elif self.kind == "negate":
            rows[self.i] = [-entry for entry in rows[self.i]]
        else:
            source = rows[self.j]
            rows[self.i] = [
                entry + self.factor * other
                for entry, other in zip(rows[self.i], source)
            ]


class SmithDecomposition(value_object.ValueObject):
    """
    ``U · M · V = S`` with `U` and `V` unimodular and `S` diagonal
    whose nonzero diagonal entries form a divisibility chain.
    """

    __value_fields__ = ("U", "S", "V", "invariant_factors")

    def __init__(
        self,
        U: IntegerMatrix,
        S: IntegerMatrix,
        V: IntegerMatrix,
        invariant_factors: typing.Sequence[int],
    ) -> None:
        self.U = U
        self.S = S
        self.V = V
        self.invariant_factors = tuple(invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


class HermiteDecomposition(value_object.ValueObject):
    """
    ``U · M = H`` with `H` in row echelon form: positive pivots and
    entries above each pivot reduced into ``[0, pivot)``. `operations`
    lists the elementary row operations that turn `M` into `H`, in the
    order they were applied.
    """

    __value_fields__ = ("H", "U", "operations")

    def __init__(
        self,
        H: IntegerMatrix,
        U: IntegerMatrix,
        operations: typing.Sequence[RowOperation],
    ) -> None:
        self.H = H
        self.U = U
        self.operations = tuple(operations)

    def pivots(self) -> typing.Tuple[typing.Tuple[int, int], ...]:
        """(row, column) of every pivot, top to bottom."""
        found = []
        for i in range(self.H.rows):
            column = next(
                (j for j in range(self.H.cols) if self.H[i, j] != 0), None
            )
            if column is None:
                break
            found.append((i, column))

        return tuple(found)


class LatticeMembership(value_object.ValueObject):
    """
    Outcome of a lattice membership query. When `member` is true,
    ``witness · M = v``.
    """

    __value_fields__ = ("member", "witness")

    def __init__(
        self,
        member: bool,
        witness: typing.Optional[typing.Sequence[int]] = None,
    ) -> None:
        self.member = member
        self.witness = None if witness is None else tuple(witness)

    def __bool__(self) -> bool:
        return self.member


def _swap_columns(rows: _Rows, i: int, j: int) -> None:
    for row in rows:
        row[i], row[j] = row[j], row[i]


def _add_column(rows: _Rows, target: int, source: int, factor: int) -> None:
    for row in rows:
        row[target] += factor * row[source]


def _add_row(rows: _Rows, target: int, source: int, factor: int) -> None:
    rows[target] = [a + factor * b for a, b in zip(rows[target], rows[source])]


def _smallest_entry(
    a: _Rows, cells: typing.Iterable[typing.Tuple[int, int]]
) -> typing.Optional[typing.Tuple[int, int]]:
    best: typing.Optional[typing.Tuple[int, int]] = None
    for i, j in cells:
        if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
            best = (i, j)

    return best


def snf(matrix: IntegerMatrix) -> SmithDecomposition:
    """
    Smith normal form with transformation matrices.

    The pivot of every stage is the entry of smallest nonzero absolute
    value in the remaining submatrix, ties going to the lowest
    (row, column). Entries are cleared with floor division, so the
    remainders shrink strictly until the pivot row and column vanish.
    """
    m, n = matrix.rows, matrix.cols
    a = matrix.to_rows()
    u = IntegerMatrix.identity(m).to_rows()
    v = IntegerMatrix.identity(n).to_rows()

    for t in range(min(m, n)):
        found = _smallest_entry(
            a, ((i, j) for i in range(t, m) for j in range(t, n))
        )
        if found is None:
            break

        while True:
            pivot_row, pivot_col = found
            if pivot_row != t:
                a[t], a[pivot_row] = a[pivot_row], a[t]
                u[t], u[pivot_row] = u[pivot_row], u[t]
            if pivot_col != t:
                _swap_columns(a, t, pivot_col)
                _swap_columns(v, t, pivot_col)

            pivot = a[t][t]
            for i in range(t + 1, m):
                factor = a[i][t] // pivot
                if factor:
                    _add_row(a, i, t, -factor)
                    _add_row(u, i, t, -factor)
            for j in range(t + 1, n):
                factor = a[t][j] // pivot
                if factor:
                    _add_column(a, j, t, -factor)
                    _add_column(v, j, t, -factor)

            found = _smallest_entry(
                a,
                [(i, t) for i in range(t + 1, m)]
                + [(t, j) for j in range(t + 1, n)],
            )
            if found is not None:
                if abs(a[found[0]][found[1]]) >= abs(pivot):
                    raise errors.InconsistencyError(
                        "Smith reduction failed to shrink a remainder."
                    )
                continue

            offending = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if a[i][j] % pivot != 0
                ),
                None,
            )
            if offending is None:
                break

            # Pulling the offending row into the pivot row creates a
            # remainder in row t that the next pass reduces.
            _add_row(a, t, offending, 1)
            _add_row(u, t, offending, 1)
            found = (t, t)

        if a[t][t] < 0:
            a[t] = [-entry for entry in a[t]]
            u[t] = [-entry for entry in u[t]]

    factors = [a[i][i] for i in range(min(m, n)) if a[i][i] != 0]
    return SmithDecomposition(
        U=IntegerMatrix.from_rows(u, m),
        S=IntegerMatrix.from_rows(a, n),
        V=IntegerMatrix.from_rows(v, n),
        invariant_factors=factors,
    )


def hnf(matrix: IntegerMatrix) -> HermiteDecomposition:
    """
    Row Hermite normal form ``U · M = H``.

    Each column is cleared below the current pivot row by repeated
    Euclidean steps on the row with the smallest absolute entry.
    Every step is recorded as a `RowOperation`.
    """
    m, n = matrix.rows, matrix.cols
    a = matrix.to_rows()
    u = IntegerMatrix.identity(m).to_rows()
    operations: typing.List[RowOperation] = []

    def perform(operation: RowOperation) -> None:
        operation.apply(a)
        operation.apply(u)
        operations.append(operation)

    r = 0
    for c in range(n):
        if r >= m:
            break

        while True:
            candidates = [i for i in range(r, m) if a[i][c] != 0]
            if not candidates:
                break
            smallest = min(candidates, key=lambda i: (abs(a[i][c]), i))
            if smallest != r:
                perform(RowOperation("swap", r, smallest))
            for i in range(r + 1, m):
                factor = a[i][c] // a[r][c]
                if factor:
                    perform(RowOperation("add", i, r, -factor))
            if all(a[i][c] == 0 for i in range(r + 1, m)):
                break

        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            perform(RowOperation("negate", r))
        for i in range(r):
            factor = a[i][c] // a[r][c]
            if factor:
                perform(RowOperation("add", i, r, -factor))
        r += 1

    return HermiteDecomposition(
        H=IntegerMatrix.from_rows(a, n),
        U=IntegerMatrix.from_rows(u, m),
        operations=operations,
    )


def lattice_member(
    vector: typing.Sequence[int], matrix: IntegerMatrix
) -> LatticeMembership:
    """
    Decide whether `vector` lies in the integer row span of `matrix`.

    Raises
    ------
    errors.DimensionMismatchError
        If the vector length differs from the column count.
    """
    if len(vector) != matrix.cols:
        raise errors.DimensionMismatchError(
            f"Vector of length {len(vector)} against a matrix "
            f"with {matrix.cols} columns."
        )

    decomposition = hnf(matrix)
    h = decomposition.H
    residual = [int(entry) for entry in vector]
    coefficients = [0] * matrix.rows
    for row, column in decomposition.pivots():
        if any(residual[j] != 0 for j in range(column)):
            return LatticeMembership(False)
        factor, remainder = divmod(residual[column], h[row, column])
        if remainder:
            return LatticeMembership(False)
        coefficients[row] = factor
        residual = [a - factor * b for a, b in zip(residual, h.row(row))]

    if any(residual):
        return LatticeMembership(False)

    return LatticeMembership(True, decomposition.U.apply_left(coefficients))
