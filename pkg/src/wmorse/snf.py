"""Exact integer matrices and the Smith normal form.

Everything here runs on arbitrary-precision Python integers; no floats,
no modular shortcuts. The Smith routine keeps unit invariant factors in
its factor list (callers drop them when reporting torsion) and can
produce the unimodular transforms on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable integer matrix, row-major.

    Zero-by-n and n-by-zero shapes are legal and show up constantly as
    boundary maps at the ends of a chain complex, so the shape is stored
    explicitly instead of being inferred from nested list lengths.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        data = tuple(entries)
        if rows < 0 or cols < 0 or len(data) != rows * cols:
            raise ValueError(f"bad shape {rows}x{cols} for {len(data)} entries")
        for x in data:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValueError(f"matrix entries must be integers, got {x!r}")
        self.rows = rows
        self.cols = cols
        self.entries = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        if rows:
            cols = len(rows[0])
            for r in rows:
                if len(r) != cols:
                    raise ValueError("ragged rows")
        elif cols is None:
            cols = 0
        flat = [x for r in rows for x in r]
        return cls(len(rows), cols, flat)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.entry(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, out)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise ValueError(f"vector length {len(vector)} does not match {self.cols} columns")
        return tuple(
            sum(self.row(i)[k] * vector[k] for k in range(self.cols))
            for i in range(self.rows)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class SmithDecomposition:
    """Result of a Smith reduction.

    factors are positive and each divides the next; unit factors are
    kept. When transforms were requested, U and V are unimodular with
    U * A * V equal to diagonal(). Without the request they are None.
    """

    rows: int
    cols: int
    factors: tuple[int, ...]
    U: IntMatrix | None = None
    V: IntMatrix | None = None

    @property
    def rank(self) -> int:
        return len(self.factors)

    def diagonal(self) -> IntMatrix:
        entries = [0] * (self.rows * self.cols)
        for k, d in enumerate(self.factors):
            entries[k * self.cols + k] = d
        return IntMatrix(self.rows, self.cols, entries)


def _swap_rows(M, T, a, b):
    M[a], M[b] = M[b], M[a]
    if T is not None:
        T[a], T[b] = T[b], T[a]


def _add_row(M, T, dst, src, k):
    # row dst += k * row src
    Ms, Md = M[src], M[dst]
    for j in range(len(Md)):
        Md[j] += k * Ms[j]
    if T is not None:
        Ts, Td = T[src], T[dst]
        for j in range(len(Td)):
            Td[j] += k * Ts[j]


def _negate_row(M, T, a):
    M[a] = [-x for x in M[a]]
    if T is not None:
        T[a] = [-x for x in T[a]]


def _swap_cols(M, T, a, b):
    for row in M:
        row[a], row[b] = row[b], row[a]
    if T is not None:
        for row in T:
            row[a], row[b] = row[b], row[a]


def _add_col(M, T, dst, src, k):
    # col dst += k * col src
    for row in M:
        row[dst] += k * row[src]
    if T is not None:
        for row in T:
            row[dst] += k * row[src]


def smith_normal_form(A: IntMatrix, want_transforms: bool = False) -> SmithDecomposition:
    """Reduce A to Smith normal form over the integers.

    Pivot choice is the entry of minimal absolute value in the remaining
    submatrix, which keeps intermediate entries from exploding on the
    small matrices seen here. The clearing loop terminates because every
    round either finishes the pivot position or strictly shrinks the
    pivot's absolute value.
    """
    m, n = A.rows, A.cols
    M = A.to_rows()
    U = IntMatrix.identity(m).to_rows() if want_transforms else None
    V = IntMatrix.identity(n).to_rows() if want_transforms else None

    t = 0
    limit = min(m, n)
    while t < limit:
        # locate a pivot of minimal absolute value in M[t:, t:]
        best = None
        for i in range(t, m):
            row = M[i]
            for j in range(t, n):
                x = row[j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _swap_rows(M, U, t, best[1])
        _swap_cols(M, V, t, best[2])

        while True:
            # clear column t below the pivot
            col_clear = True
            for i in range(t + 1, m):
                if M[i][t] != 0:
                    q = M[i][t] // M[t][t]
                    _add_row(M, U, i, t, -q)
                    if M[i][t] != 0:
                        # remainder is smaller than the pivot; promote it
                        _swap_rows(M, U, t, i)
                        col_clear = False
            if not col_clear:
                continue
            # clear row t right of the pivot
            row_clear = True
            for j in range(t + 1, n):
                if M[t][j] != 0:
                    q = M[t][j] // M[t][t]
                    _add_col(M, V, j, t, -q)
                    if M[t][j] != 0:
                        _swap_cols(M, V, t, j)
                        row_clear = False
            if not row_clear:
                continue
            # the pivot must divide the rest of the submatrix, or the
            # invariant factor chain breaks; fold a bad row in and retry
            d = M[t][t]
            offender = None
            for i in range(t + 1, m):
                row = M[i]
                for j in range(t + 1, n):
                    if row[j] % d != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(M, U, t, offender, 1)

        if M[t][t] < 0:
            _negate_row(M, U, t)
        t += 1

    factors = tuple(M[k][k] for k in range(limit) if M[k][k] != 0)
    return SmithDecomposition(
        rows=m,
        cols=n,
        factors=factors,
        U=IntMatrix.from_rows(U, cols=m) if want_transforms else None,
        V=IntMatrix.from_rows(V, cols=n) if want_transforms else None,
    )


def rank(A: IntMatrix) -> int:
    """Rank of A over the integers (equivalently over the rationals)."""
    return smith_normal_form(A).rank


def invariant_factors(A: IntMatrix) -> tuple[int, ...]:
    return smith_normal_form(A).factors
