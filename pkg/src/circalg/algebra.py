"""Square-free algebra ``B(E)`` and circulation algebras of matrices.

A monomial of ``B(E) = Q[x_e]/(x_e^2)`` is a set of edge variables and is
stored as a bitmask.  The circulation algebra of a matrix ``A`` is the
subalgebra generated by the row forms ``y_v = sum_e A[v, e] x_e``; it is
graded by degree and its Hilbert function is computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Mapping

from .linalg import Echelon, ExactMatrix, format_fraction, integer_vector, to_fraction


class DimensionMismatchError(ValueError):
    """Operands live in square-free algebras over different ground sets."""


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class SquareFreeElement:
    num_edges: int
    terms: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mask, c in self.terms.items():
            c = to_fraction(c)
            if mask < 0 or mask >> self.num_edges:
                raise ValueError(f"monomial {mask:b} uses variables beyond {self.num_edges}")
            if c:
                clean[mask] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, num_edges: int) -> "SquareFreeElement":
        return cls(num_edges, {})

    @classmethod
    def one(cls, num_edges: int) -> "SquareFreeElement":
        return cls(num_edges, {0: Fraction(1)})

    @classmethod
    def variable(cls, num_edges: int, e: int, coeff=1) -> "SquareFreeElement":
        return cls(num_edges, {1 << e: to_fraction(coeff)})

    @classmethod
    def monomial(cls, num_edges: int, edges, coeff=1) -> "SquareFreeElement":
        mask = 0
        for e in edges:
            mask |= 1 << e
        return cls(num_edges, {mask: to_fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {bin(m).count("1") for m in self.terms}

    def __add__(self, other):
        return sf_add(self, other)

    def __mul__(self, other):
        if isinstance(other, SquareFreeElement):
            return sf_mul(self, other)
        c = to_fraction(other)
        return SquareFreeElement(self.num_edges, {m: c * v for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return sf_add(self, -other)

    def __pow__(self, n: int):
        out = SquareFreeElement.one(self.num_edges)
        for _ in range(n):
            out = sf_mul(out, self)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms, key=lambda m: (bin(m).count("1"), m)):
            c = self.terms[mask]
            mono = "".join(f"x{e + 1}" for e in _bits(mask)) or "1"
            if mono == "1":
                parts.append(format_fraction(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_fraction(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _check_same(a: SquareFreeElement, b: SquareFreeElement):
    if a.num_edges != b.num_edges:
        raise DimensionMismatchError(
            f"ground sets differ: {a.num_edges} vs {b.num_edges} variables"
        )


def sf_add(a: SquareFreeElement, b: SquareFreeElement) -> SquareFreeElement:
    _check_same(a, b)
    terms = dict(a.terms)
    for m, c in b.terms.items():
        terms[m] = terms.get(m, 0) + c
    return SquareFreeElement(a.num_edges, terms)


def sf_mul(a: SquareFreeElement, b: SquareFreeElement) -> SquareFreeElement:
    _check_same(a, b)
    terms: dict[int, Fraction] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            if m1 & m2:
                continue  # x_e^2 = 0
            m = m1 | m2
            terms[m] = terms.get(m, 0) + c1 * c2
    return SquareFreeElement(a.num_edges, terms)


def generators_from_matrix(A: ExactMatrix) -> list[SquareFreeElement]:
    """Row forms ``y_v = sum_e A[v, e] x_e``, one per row of ``A``."""
    return [
        SquareFreeElement(A.cols, {1 << e: a for e, a in enumerate(A.row(v)) if a})
        for v in range(A.rows)
    ]


@dataclass(frozen=True)
class HilbertFunction:
    """Graded dimensions ``dims[k] = dim C^k``, truncated after the top degree."""

    dims: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    def __str__(self):
        return " ".join(map(str, self.dims)) + f" | total {self.total}"

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "total": self.total}


def _integer_rows(A: ExactMatrix) -> list[dict[int, int]]:
    # Rescaling a row only rescales its generator, so the algebra is unchanged.
    out = []
    for v in range(A.rows):
        ints = integer_vector(A.row(v))
        out.append({1 << e: c for e, c in enumerate(ints) if c})
    return out


def _times_linear(vec: dict[int, int], lin: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for m, c in vec.items():
        for bit, a in lin.items():
            if m & bit:
                continue
            k = m | bit
            out[k] = out.get(k, 0) + c * a
    return {k: c for k, c in out.items() if c}


def graded_dimension(A: ExactMatrix, k: int) -> int:
    """Dimension of the degree-``k`` part of the circulation algebra of ``A``.

    Spans the component with every product ``y_{v1} ... y_{vk}`` over
    multisets of rows and takes the exact rank.  Prefix products that are
    already zero are pruned.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k == 0:
        return 1
    if k > A.cols:
        return 0
    gens = [g for g in _integer_rows(A) if g]
    ech = Echelon()

    def extend(prefix: dict[int, int], start: int, depth: int):
        if depth == k:
            ech.add(prefix)
            return
        for i in range(start, len(gens)):
            nxt = _times_linear(prefix, gens[i])
            if nxt:
                extend(nxt, i, depth + 1)

    extend({0: 1}, 0, 0)
    return len(ech)


def hilbert_function(A: ExactMatrix) -> HilbertFunction:
    """Hilbert function of the circulation algebra of ``A``.

    Uses ``C^{k+1} = span{y_v * b : b in basis(C^k)}``, which spans the
    same space as all degree ``k+1`` products but with far fewer vectors.
    Stops at the first vanishing degree.
    """
    gens = [g for g in _integer_rows(A) if g]
    dims = [1]
    basis: list[dict[int, int]] = [{0: 1}]
    while True:
        ech = Echelon()
        for b in basis:
            for g in gens:
                ech.add(_times_linear(b, g))
        if not len(ech):
            break
        dims.append(len(ech))
        basis = list(ech.pivots.values())
    return HilbertFunction(tuple(dims))


def degree_component_bound(num_rows: int, num_cols: int, k: int) -> int:
    """``min(C(|E|, k), #multisets of k generators)``."""
    return min(comb(num_cols, k), comb(num_rows + k - 1, k))


def square_free_monomials(num_edges: int, k: int):
    for combo in combinations(range(num_edges), k):
        mask = 0
        for e in combo:
            mask |= 1 << e
        yield mask
