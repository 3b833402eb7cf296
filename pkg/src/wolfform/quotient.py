"""Per-degree linear algebra for quotients by homogeneous ideals.

A `RingPresentation` is generators plus homogeneous relations.  For each
degree k the quotient's vector space is computed exactly: enumerate the
degree-k monomials, span every degree-k multiple of a relation, row-reduce,
and keep the non-pivot monomials as the basis.  All queries are capped at
the presentation's formal dimension; everything above it reduces to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .linalg import ExactMatrix, F0, Vector, rref
from .poly import (GradedPolynomial, Generator, Mono, monomial_degree,
                   monomials_of_degree)

__all__ = ["DegreeBasis", "RingPresentation", "degree_basis",
           "multiplication_map", "multiplication_matrix", "normal_form"]


@dataclass(frozen=True)
class RingPresentation:
    generators: tuple[Generator, ...]
    relations: tuple[GradedPolynomial, ...]
    formal_dimension: int

    def __post_init__(self) -> None:
        if self.formal_dimension < 0:
            raise ValueError("formal dimension must be nonnegative")
        for r in self.relations:
            if r.generators != self.generators:
                raise ValueError("relation over a different generator list")
            d = r.homogeneous_degree()  # raises if mixed
            if d is None or d == 0:
                raise ValueError("relations must be homogeneous of positive degree")

    def polynomial(self, text: str) -> GradedPolynomial:
        from .poly import parse_polynomial
        return parse_polynomial(text, self.generators)


class DegreeBasis:
    """Monomial basis of one degree of the quotient plus its reduction map."""

    def __init__(self, degree: int, generators: tuple[Generator, ...],
                 monomials: tuple[Mono, ...],
                 reduction_rows: Sequence[Sequence[Fraction]],
                 pivot_cols: Sequence[int], capped: bool = False):
        self.degree = degree
        self.generators = generators
        self.monomials = monomials
        self.capped = capped  # above the formal dimension: everything is zero
        pivot_set = set(pivot_cols)
        self.basis = tuple(m for j, m in enumerate(monomials) if j not in pivot_set)
        self._index = {m: j for j, m in enumerate(monomials)}
        nonpivot = [j for j in range(len(monomials)) if j not in pivot_set]
        # normal form of each monomial, as coordinates over self.basis
        rows: dict[int, Vector] = {}
        for row, p in zip(reduction_rows, pivot_cols):
            rows[p] = tuple(-row[j] for j in nonpivot)
        unit = [F0] * len(nonpivot)
        for rank, j in enumerate(nonpivot):
            vec = list(unit)
            vec[rank] = Fraction(1)
            rows[j] = tuple(vec)
        self._monomial_rows = tuple(rows[j] for j in range(len(monomials)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def monomial_coordinates(self, mono: Mono) -> Vector:
        """Normal form of a single degree-k monomial over the basis."""
        j = self._index.get(mono)
        if j is None:
            raise ValueError(
                f"monomial {mono!r} does not have degree {self.degree}")
        return self._monomial_rows[j]

    def reduce(self, p: GradedPolynomial) -> Vector:
        """Coordinates of a degree-k polynomial over the basis."""
        if p.generators != self.generators:
            raise ValueError("polynomial over a different generator list")
        if self.capped:
            return ()
        out = [F0] * self.dim
        for mono, coeff in p.terms:
            if mono not in self._index:
                raise ValueError(
                    f"term of degree {monomial_degree(self.generators, mono)} "
                    f"in a degree-{self.degree} reduction")
            row = self._monomial_rows[self._index[mono]]
            for i in range(self.dim):
                if row[i]:
                    out[i] += coeff * row[i]
        return tuple(out)

    def polynomial(self, coords: Sequence[Fraction]) -> GradedPolynomial:
        """Inverse of `reduce` on basis coordinates."""
        if len(coords) != self.dim:
            raise ValueError("coordinate vector has wrong length")
        return GradedPolynomial.from_dict(
            self.generators, {m: c for m, c in zip(self.basis, coords)})


def _empty_basis(degree: int, generators: tuple[Generator, ...],
                 capped: bool = False) -> DegreeBasis:
    return DegreeBasis(degree, generators, (), (), (), capped)


@lru_cache(maxsize=None)
def degree_basis(presentation: RingPresentation, degree: int) -> DegreeBasis:
    """Basis of the quotient in one degree.

    Degrees outside [0, formal_dimension] return the empty basis; for the
    built-in presentations everything above the formal dimension is zero
    in the quotient anyway.
    """
    gens = presentation.generators
    if degree < 0 or degree > presentation.formal_dimension:
        return _empty_basis(degree, gens, capped=True)
    monomials = monomials_of_degree(gens, degree)
    if not monomials:
        return _empty_basis(degree, gens)
    index = {m: j for j, m in enumerate(monomials)}
    rows = []
    for rel in presentation.relations:
        d = rel.homogeneous_degree()
        if d is None or d > degree:
            continue
        for cofactor in monomials_of_degree(gens, degree - d):
            multiple = GradedPolynomial.monomial(gens, cofactor) * rel
            row = [F0] * len(monomials)
            for mono, coeff in multiple.terms:
                row[index[mono]] = coeff
            if any(row):
                rows.append(row)
    reduced, pivots = rref(rows, len(monomials))
    return DegreeBasis(degree, gens, monomials, reduced, pivots)


def normal_form(presentation: RingPresentation, p: GradedPolynomial) -> Vector:
    """Coordinates of a homogeneous polynomial in its degree's basis.

    The zero vector comes back exactly when p lies in the relation ideal
    (through the formal dimension).  The zero polynomial yields ().
    """
    degree = p.homogeneous_degree()  # raises on mixed degrees
    if degree is None:
        return ()
    return degree_basis(presentation, degree).reduce(p)


@lru_cache(maxsize=None)
def multiplication_matrix(presentation: RingPresentation, c: GradedPolynomial,
                          degree: int) -> ExactMatrix:
    """Matrix of multiplication by c from degree k to degree k + deg c.

    Rows are indexed by the target basis, columns by the source basis.
    """
    d = c.homogeneous_degree()
    if d is None:
        raise ValueError("multiplication by zero has no well-defined degree")
    return multiplication_map(presentation, c, degree, degree + d)


def multiplication_map(presentation: RingPresentation, c: GradedPolynomial,
                       source_degree: int, target_degree: int) -> ExactMatrix:
    """Multiplication matrix with an explicit target degree (c may be 0)."""
    source = degree_basis(presentation, source_degree)
    target = degree_basis(presentation, target_degree)
    cols = []
    for mono in source.basis:
        product = GradedPolynomial.monomial(presentation.generators, mono) * c
        cols.append(target.reduce(product))
    rows = tuple(tuple(col[i] for col in cols) for i in range(target.dim))
    return ExactMatrix.from_rows(rows, target.dim, source.dim)
