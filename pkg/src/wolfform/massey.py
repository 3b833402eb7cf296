"""Triple Massey products in a bundle model.

For cocycles a1, a2, a3 with a1*a2 and a2*a3 exact, pick primitives
a1*a2 = d(x~) and a2*a3 = d(y~); the product is the class of

    a1 * y~  +  (-1)^(|a1| + 1) x~ * a3

in degree |a1|+|a2|+|a3|-1, well defined up to the indeterminacy subspace
[a1]*H^(|a2|+|a3|-1) + [a3]*H^(|a1|+|a2|-1).  Since d(p + q*u) = q*e,
solving d(w) = t is one exact linear solve against multiplication by the
Euler class; the solver picks the reduced-echelon particular solution, and
triviality does not depend on that choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import SpanReducer, Vector, solve_particular
from .model import (BundleModel, ModelClass, add_classes, class_product,
                    cochain_product, differential, model_class,
                    model_cohomology, scale_class, zero_class)

__all__ = ["MasseyResult", "is_trivial", "solve_primitive", "triple_massey"]


@dataclass(frozen=True)
class MasseyResult:
    """A defined triple Massey product with its triviality certificate."""

    inputs: tuple[ModelClass, ModelClass, ModelClass]
    degree: int
    representative: ModelClass
    representative_coords: Vector
    indeterminacy_basis: tuple[Vector, ...]
    trivial: bool

    @property
    def indeterminacy_dim(self) -> int:
        return len(self.indeterminacy_basis)


def solve_primitive(model: BundleModel, target: ModelClass) -> ModelClass | None:
    """Some w with d(w) = target, or None when target is not exact.

    Exact elements are pure base classes in the image of multiplication by
    the Euler class; the fiber component of an exact target must vanish.
    """
    if not target.cocycle:
        raise ValueError("solve_primitive needs a cocycle target")
    if any(target.fiber_part):
        return None
    k = target.degree
    if not any(target.base_part):
        return zero_class(model, k - 1)
    matrix = model.euler_matrix(k - 4)
    solution = solve_particular(matrix.rows, target.base_part, matrix.ncols)
    if solution is None:
        return None
    return model_class(model, k - 1, fiber_part=solution)


def triple_massey(model: BundleModel, a1: ModelClass, a2: ModelClass,
                  a3: ModelClass) -> MasseyResult | None:
    """The Massey product <a1, a2, a3>, or None when it is not defined."""
    for a in (a1, a2, a3):
        if not a.cocycle:
            raise ValueError("Massey product inputs must be cocycles")
        if a.degree <= 0:
            raise ValueError("Massey product inputs must have positive degree")
    x12 = solve_primitive(model, cochain_product(model, a1, a2))
    if x12 is None:
        return None
    y23 = solve_primitive(model, cochain_product(model, a2, a3))
    if y23 is None:
        return None
    sign = Fraction(1 if (a1.degree + 1) % 2 == 0 else -1)
    representative = add_classes(
        model,
        cochain_product(model, a1, y23),
        scale_class(model, cochain_product(model, x12, a3), sign))
    if any(differential(model, representative).base_part):
        raise AssertionError("Massey representative is not closed")

    degree = a1.degree + a2.degree + a3.degree - 1
    cohom = model_cohomology(model, degree)
    coords = cohom.coordinates(representative)

    span = SpanReducer(cohom.dim)
    vectors = []
    for h in model_cohomology(model, a2.degree + a3.degree - 1).representatives:
        vectors.append(cohom.coordinates(class_product(model, a1, h)))
    for h in model_cohomology(model, a1.degree + a2.degree - 1).representatives:
        vectors.append(cohom.coordinates(class_product(model, h, a3)))
    basis = tuple(v for v in vectors if span.add(v))

    return MasseyResult(
        inputs=(a1, a2, a3),
        degree=degree,
        representative=representative,
        representative_coords=coords,
        indeterminacy_basis=basis,
        trivial=span.contains(coords))


def is_trivial(result: MasseyResult) -> bool:
    """Whether the representative lies in the indeterminacy subspace."""
    span = SpanReducer(len(result.representative_coords),
                       result.indeterminacy_basis)
    return span.contains(result.representative_coords)
