"""Exact linear algebra over the rationals: RREF, solving, kernels, spans.

Everything works on plain tuples/lists of `Fraction`.  The reduced row
echelon form is unique, so the pivot-row heuristic below only limits
intermediate coefficient growth; it cannot change any result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = ["ExactMatrix", "SpanReducer", "kernel_basis",
           "kernel_with_free_columns", "rref", "solve_particular"]

F0 = Fraction(0)

Vector = tuple[Fraction, ...]


def _pivot_key(entry: Fraction):
    # Prefer small denominators, then small numerators.
    return (entry.denominator, abs(entry.numerator))


def rref(rows: Iterable[Sequence[Fraction]], ncols: int):
    """Reduced row echelon form.

    Returns (rows, pivot_cols) where rows are the nonzero rows of the RREF
    and pivot_cols[i] is the pivot column of rows[i].
    """
    work = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    out: list[list[Fraction]] = []
    for col in range(ncols):
        best = None
        for idx, row in enumerate(work):
            if row[col] != 0:
                key = _pivot_key(row[col])
                if best is None or key < best[0]:
                    best = (key, idx)
        if best is None:
            continue
        row = work.pop(best[1])
        inv = Fraction(1) / row[col]
        row = [v * inv for v in row]
        for other in work:
            f = other[col]
            if f:
                for j in range(col, ncols):
                    other[j] -= f * row[j]
        work = [r for r in work if any(r)]
        for prev in out:
            f = prev[col]
            if f:
                for j in range(col, ncols):
                    prev[j] -= f * row[j]
        out.append(row)
        pivots.append(col)
        if not work:
            break
    return out, pivots


def solve_particular(rows: Sequence[Sequence[Fraction]],
                     rhs: Sequence[Fraction], ncols: int):
    """One solution of M x = rhs with free variables set to zero, or None.

    `rows` holds the rows of M (target dimension many, each of length
    ncols); the returned vector has length ncols.
    """
    nrows = len(rows)
    if nrows != len(rhs):
        raise ValueError("right-hand side has wrong length")
    if nrows == 0:
        return (F0,) * ncols
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, ncols + 1)
    solution = [F0] * ncols
    for row, p in zip(reduced, pivots):
        if p == ncols:
            return None  # inconsistent
        solution[p] = row[ncols]
    return tuple(solution)


def kernel_with_free_columns(rows: Sequence[Sequence[Fraction]], ncols: int):
    """Kernel basis of M plus the free column carried by each basis vector.

    Vector i has a one in free column i and zeros in the other free
    columns, so the free-column entries of any kernel element are its
    coordinates over this basis.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    free_cols = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        vec = [F0] * ncols
        vec[j] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[j]
        basis.append(tuple(vec))
        free_cols.append(j)
    return tuple(basis), tuple(free_cols)


def kernel_basis(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[Vector, ...]:
    """Basis of the kernel of M, one vector per free column (ascending)."""
    return kernel_with_free_columns(rows, ncols)[0]


class SpanReducer:
    """Incrementally row-reduced spanning set of a subspace of Q^dim."""

    def __init__(self, dim: int, vectors: Iterable[Sequence[Fraction]] = ()):
        self.dim = dim
        self._rows: list[list[Fraction]] = []  # kept in RREF, pivots ascending
        self._pivots: list[int] = []
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._pivots)

    def residual(self, vector: Sequence[Fraction]) -> Vector:
        """Reduce a vector modulo the span; zeroes out all pivot columns."""
        if len(vector) != self.dim:
            raise ValueError("vector has wrong length")
        vec = list(vector)
        for row, p in zip(self._rows, self._pivots):
            f = vec[p]
            if f:
                for j in range(p, self.dim):
                    vec[j] -= f * row[j]
        return tuple(vec)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return not any(self.residual(vector))

    def add(self, vector: Sequence[Fraction]) -> bool:
        """Insert a vector; True if it enlarged the span."""
        res = list(self.residual(vector))
        lead = next((j for j, v in enumerate(res) if v), None)
        if lead is None:
            return False
        inv = Fraction(1) / res[lead]
        res = [v * inv for v in res]
        for row in self._rows:
            f = row[lead]
            if f:
                for j in range(lead, self.dim):
                    row[j] -= f * res[j]
        at = next((i for i, p in enumerate(self._pivots) if p > lead),
                  len(self._pivots))
        self._rows.insert(at, res)
        self._pivots.insert(at, lead)
        return True


@dataclass(frozen=True)
class ExactMatrix:
    """Dense rational matrix; rows[i][j] maps source j to target i."""

    rows: tuple[Vector, ...]
    nrows: int
    ncols: int

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Fraction]], nrows: int, ncols: int) -> "ExactMatrix":
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("inconsistent matrix shape")
        return ExactMatrix(tuple(tuple(r) for r in rows), nrows, ncols)

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        if len(vector) != self.ncols:
            raise ValueError("vector has wrong length")
        return tuple(sum((r[j] * vector[j] for j in range(self.ncols)), F0)
                     for r in self.rows)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    @property
    def rank(self) -> int:
        return len(rref(self.rows, self.ncols)[1])
