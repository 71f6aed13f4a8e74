"""Exact rational matrices, rank and null spaces.

Everything here works over the rationals.  Rank is computed by
fraction-free elimination on integer rows (each rational row is first
cleared of denominators), which is exact and much faster than pushing
``Fraction`` objects through a textbook elimination.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class ExactMatrix:
    """Dense row-major matrix of rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        entries = tuple(to_fraction(x) for r in rows for x in r)
        return cls(len(rows), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "ExactMatrix":
        if any(len(c) != rows for c in columns):
            raise ValueError("column length does not match row count")
        return cls.from_rows(
            [[columns[j][i] for j in range(len(columns))] for i in range(rows)],
            cols=len(columns),
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(index)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def row_list(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def column_list(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def select_columns(self, indices: Iterable[int]) -> "ExactMatrix":
        indices = list(indices)
        return ExactMatrix.from_columns([self.column(j) for j in indices], self.rows)

    def select_rows(self, indices: Iterable[int]) -> "ExactMatrix":
        return ExactMatrix.from_rows([self.row(i) for i in indices], cols=self.cols)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_rows(self.column_list(), cols=self.rows)

    def scale_column(self, j: int, factor) -> "ExactMatrix":
        factor = to_fraction(factor)
        cols = self.column_list()
        cols[j] = tuple(factor * x for x in cols[j])
        return ExactMatrix.from_columns(cols, self.rows)

    def scale_row(self, i: int, factor) -> "ExactMatrix":
        factor = to_fraction(factor)
        rows = self.row_list()
        rows[i] = tuple(factor * x for x in rows[i])
        return ExactMatrix.from_rows(rows, cols=self.cols)

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_fraction(x) for x in self.row(i)] for i in range(self.rows)],
        }

    @classmethod
    def from_json(cls, obj) -> "ExactMatrix":
        if isinstance(obj, str):
            obj = json.loads(obj)
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
        # accept both nested rows and a flat row-major list
        if entries and isinstance(entries[0], list):
            flat = [x for r in entries for x in r]
        else:
            flat = list(entries)
        return cls(rows, cols, tuple(to_fraction(x) for x in flat))

    def __str__(self):
        cells = [[format_fraction(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def integer_vector(values: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector by the lcm of its denominators."""
    den = 1
    for x in values:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in values]


class Echelon:
    """Incrementally built integer row-echelon basis of a subspace.

    Vectors are sparse ``{coordinate: int}`` dicts.  Each stored row has a
    distinct pivot coordinate (its smallest key) and content 1.  ``add``
    reports whether the new vector enlarged the span.
    """

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: dict[int, int]) -> dict[int, int]:
        v = {k: c for k, c in vec.items() if c}
        pivots = self.pivots
        while v:
            hit = None
            for p in sorted(v):
                if p in pivots:
                    hit = p
                    break
            if hit is None:
                return v
            row = pivots[hit]
            a, b = row[hit], v[hit]
            g = gcd(a, b)
            a, b = a // g, b // g
            out = {k: a * c for k, c in v.items()}
            for k, c in row.items():
                out[k] = out.get(k, 0) - b * c
            v = {k: c for k, c in out.items() if c}
            if v:
                g = 0
                for c in v.values():
                    g = gcd(g, c)
                if g > 1:
                    v = {k: c // g for k, c in v.items()}
        return v

    def add(self, vec: dict[int, int]) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        self.pivots[min(v)] = v
        return True


def _sparse_rows(vectors: Iterable[Sequence[Fraction]]) -> Iterable[dict[int, int]]:
    for vec in vectors:
        ints = integer_vector(vec)
        yield {k: c for k, c in enumerate(ints) if c}


def rank_of_vectors(vectors: Iterable[Sequence[Fraction]]) -> int:
    ech = Echelon()
    for v in _sparse_rows(vectors):
        ech.add(v)
    return len(ech)


def matrix_rank(A: ExactMatrix) -> int:
    """Exact rank over the rationals."""
    if A.rows == 0 or A.cols == 0:
        return 0
    # eliminate along the shorter side
    vectors = A.column_list() if A.cols < A.rows else A.row_list()
    return rank_of_vectors(vectors)


def columns_independent(A: ExactMatrix, cols: Iterable[int]) -> bool:
    cols = list(cols)
    ech = Echelon()
    for v in _sparse_rows(A.column(j) for j in cols):
        if not ech.add(v):
            return False
    return True


def rref(A: ExactMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns, in Fractions."""
    M = [list(A.row(i)) for i in range(A.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(A.cols):
        pivot = None
        for i in range(r, A.rows):
            if M[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(A.rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == A.rows:
            break
    return M[:r], pivots


def kernel_basis(A: ExactMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space ``{x : A x = 0}``.

    One vector per free column, scaled to coprime integers with a
    positive leading entry.
    """
    R, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * A.cols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        ints = integer_vector(x)
        g = 0
        for c in ints:
            g = gcd(g, c)
        lead = next(c for c in ints if c)
        sign = 1 if lead > 0 else -1
        basis.append(tuple(Fraction(sign * c // g) for c in ints))
    return basis


def mat_vec(A: ExactMatrix, x: Sequence) -> tuple[Fraction, ...]:
    return tuple(sum((a * b for a, b in zip(A.row(i), x)), Fraction(0)) for i in range(A.rows))
