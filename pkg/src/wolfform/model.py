"""Rational model of a 3-sphere bundle and its exact cohomology.

The model is the base quotient ring (zero differential) extended by one odd
generator u of degree 3 with du = e, the degree-4 Euler class.  Every
element is p + q*u with p, q in the base, and d(p + q*u) = q*e; the base is
evenly graded, so no signs appear.  Degree-k cohomology splits as

    H^k  =  coker(e: A^{k-4} -> A^k)  +  ker(e: A^{k-3} -> A^{k+1}) * u,

computed lazily per degree by exact row reduction and memoized per model.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import (ExactMatrix, F0, SpanReducer, Vector,
                     kernel_with_free_columns)
from .poly import (GradedPolynomial, Generator, extend_generators,
                   format_polynomial)
from .quotient import RingPresentation, degree_basis, multiplication_map
from .spaces import EulerClassSpec, SpaceId, presentation

__all__ = ["BundleModel", "ModelClass", "ModelCohomology", "betti",
           "build_model", "class_product", "model_cohomology"]

FIBER_DEGREE = 3


class BundleModel:
    """Base presentation with one degree-3 generator u, du = euler.

    Equality and hashing see only (base, euler).  The per-degree
    cohomology memo is write-once and idempotent: concurrent readers can
    at worst duplicate a computation, never observe different results.
    """

    def __init__(self, base: RingPresentation, euler: GradedPolynomial):
        if euler.generators != base.generators:
            raise ValueError("Euler class over a different generator list")
        if any(g.is_odd for g in base.generators):
            raise ValueError("base generators must all have even degree")
        degree = euler.homogeneous_degree()
        if degree not in (None, 4):
            raise ValueError(f"Euler class must have degree 4, got {degree}")
        self.base = base
        self.euler = euler
        self.u = Generator("u", FIBER_DEGREE)
        self.formal_dimension = base.formal_dimension + FIBER_DEGREE
        self._cohomology: dict[int, ModelCohomology] = {}
        self._euler_matrices: dict[int, ExactMatrix] = {}

    def __eq__(self, other) -> bool:
        return (isinstance(other, BundleModel)
                and self.base == other.base and self.euler == other.euler)

    def __hash__(self) -> int:
        return hash((self.base, self.euler))

    def __repr__(self) -> str:
        return f"BundleModel(du={format_polynomial(self.euler)})"

    def euler_matrix(self, source_degree: int) -> ExactMatrix:
        """Multiplication by the Euler class, base degree k -> k + 4."""
        matrix = self._euler_matrices.get(source_degree)
        if matrix is None:
            matrix = multiplication_map(self.base, self.euler,
                                        source_degree, source_degree + 4)
            self._euler_matrices[source_degree] = matrix
        return matrix


def build_model(space: SpaceId, euler: EulerClassSpec) -> BundleModel:
    return BundleModel(presentation(space), euler.to_polynomial(space))


@dataclass(frozen=True)
class ModelClass:
    """Element of the model in one degree, as base-ring coordinates.

    base_part lives over the degree-k basis of the base quotient and
    fiber_part over the degree-(k-3) basis (the coefficient of u).
    """

    degree: int
    base_part: Vector
    fiber_part: Vector
    cocycle: bool

    @property
    def is_zero(self) -> bool:
        return not any(self.base_part) and not any(self.fiber_part)


def model_class(model: BundleModel, degree: int,
                base_part: Sequence[Fraction] = (),
                fiber_part: Sequence[Fraction] = ()) -> ModelClass:
    """Build a ModelClass from coordinates, padding absent parts with zeros."""
    dim_base = degree_basis(model.base, degree).dim
    dim_fiber = degree_basis(model.base, degree - FIBER_DEGREE).dim
    base = tuple(base_part) if base_part else (F0,) * dim_base
    fiber = tuple(fiber_part) if fiber_part else (F0,) * dim_fiber
    if len(base) != dim_base or len(fiber) != dim_fiber:
        raise ValueError("coordinate vectors do not match the degree's bases")
    closed = not any(model.euler_matrix(degree - FIBER_DEGREE).apply(fiber))
    return ModelClass(degree, base, fiber, closed)


def class_from_polynomials(model: BundleModel, base_poly: GradedPolynomial,
                           fiber_poly: GradedPolynomial | None = None,
                           degree: int | None = None) -> ModelClass:
    """ModelClass for base_poly + fiber_poly*u, reduced to coordinates."""
    base_degree = base_poly.homogeneous_degree()
    fiber_degree = None if fiber_poly is None else fiber_poly.homogeneous_degree()
    if degree is None:
        if base_degree is not None:
            degree = base_degree
        elif fiber_degree is not None:
            degree = fiber_degree + FIBER_DEGREE
        else:
            raise ValueError("zero class needs an explicit degree")
    if base_degree is not None and base_degree != degree:
        raise ValueError(f"base part has degree {base_degree}, expected {degree}")
    if fiber_degree is not None and fiber_degree != degree - FIBER_DEGREE:
        raise ValueError(
            f"fiber part has degree {fiber_degree}, expected {degree - FIBER_DEGREE}")
    base = degree_basis(model.base, degree).reduce(base_poly)
    fiber_basis = degree_basis(model.base, degree - FIBER_DEGREE)
    fiber = (fiber_basis.reduce(fiber_poly) if fiber_poly is not None
             else (F0,) * fiber_basis.dim)
    return model_class(model, degree, base, fiber)


def class_from_string(model: BundleModel, text: str) -> ModelClass:
    """Parse 'p + q*u' over the base generators plus u into a ModelClass."""
    from .poly import parse_polynomial
    extended = model.base.generators + (model.u,)
    mixed = parse_polynomial(text, extended)
    base_terms: dict = {}
    fiber_terms: dict = {}
    for mono, coeff in mixed.terms:
        *head, u_exp = mono
        (fiber_terms if u_exp else base_terms)[tuple(head)] = coeff
    base_poly = GradedPolynomial.from_dict(model.base.generators, base_terms)
    fiber_poly = GradedPolynomial.from_dict(model.base.generators, fiber_terms)
    return class_from_polynomials(
        model, base_poly, None if fiber_poly.is_zero else fiber_poly)


def zero_class(model: BundleModel, degree: int) -> ModelClass:
    return model_class(model, degree)


def differential(model: BundleModel, element: ModelClass) -> ModelClass:
    """d(p + q*u) = q*e, one degree up."""
    image = model.euler_matrix(element.degree - FIBER_DEGREE).apply(element.fiber_part)
    return model_class(model, element.degree + 1, base_part=image)


def add_classes(model: BundleModel, a: ModelClass, b: ModelClass) -> ModelClass:
    if a.degree != b.degree:
        raise ValueError("cannot add classes of different degrees")
    return model_class(
        model, a.degree,
        tuple(x + y for x, y in zip(a.base_part, b.base_part)),
        tuple(x + y for x, y in zip(a.fiber_part, b.fiber_part)))


def scale_class(model: BundleModel, a: ModelClass, factor: Fraction | int) -> ModelClass:
    f = Fraction(factor)
    return model_class(model, a.degree,
                       tuple(f * x for x in a.base_part),
                       tuple(f * x for x in a.fiber_part))


def cochain_product(model: BundleModel, a: ModelClass, b: ModelClass) -> ModelClass:
    """(p1 + q1 u)(p2 + q2 u) = p1 p2 + (p1 q2 + q1 p2) u; u^2 = 0."""
    base = model.base
    p1 = degree_basis(base, a.degree).polynomial(a.base_part)
    q1 = degree_basis(base, a.degree - FIBER_DEGREE).polynomial(a.fiber_part)
    p2 = degree_basis(base, b.degree).polynomial(b.base_part)
    q2 = degree_basis(base, b.degree - FIBER_DEGREE).polynomial(b.fiber_part)
    degree = a.degree + b.degree
    base_part = degree_basis(base, degree).reduce(p1 * p2)
    fiber_part = degree_basis(base, degree - FIBER_DEGREE).reduce(p1 * q2 + q1 * p2)
    return model_class(model, degree, base_part, fiber_part)


def class_product(model: BundleModel, a: ModelClass, b: ModelClass) -> ModelClass:
    """Product of cocycles, with the base part reduced modulo coboundaries."""
    if not (a.cocycle and b.cocycle):
        raise ValueError("class_product needs cocycle representatives")
    product = cochain_product(model, a, b)
    cohom = model_cohomology(model, product.degree)
    return model_class(model, product.degree,
                       cohom.canonical_base(product.base_part),
                       product.fiber_part)


class ModelCohomology:
    """One degree of H(model): representatives plus a coordinate projection."""

    def __init__(self, model: BundleModel, degree: int):
        self.degree = degree
        base_k = degree_basis(model.base, degree)
        # coboundaries: image of multiplication by e from base degree k-4
        image = model.euler_matrix(degree - 4).columns() if degree >= 4 else ()
        self._coker = SpanReducer(base_k.dim, image)
        pivot_set = set(self._coker.pivots)
        self._coset_indices = tuple(j for j in range(base_k.dim)
                                    if j not in pivot_set)
        # cocycles of fiber type: kernel of e one degree below the fiber shift
        kernel_matrix = model.euler_matrix(degree - FIBER_DEGREE)
        self._kernel, self._free_cols = kernel_with_free_columns(
            kernel_matrix.rows, kernel_matrix.ncols)
        reps = []
        for j in self._coset_indices:
            coords = tuple(Fraction(1) if i == j else F0
                           for i in range(base_k.dim))
            reps.append(model_class(model, degree, base_part=coords))
        for vec in self._kernel:
            reps.append(model_class(model, degree, fiber_part=vec))
        self.representatives = tuple(reps)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def canonical_base(self, base_part: Sequence[Fraction]) -> Vector:
        """Reduce a base cochain modulo coboundaries (zero at image pivots)."""
        return self._coker.residual(base_part)

    def coordinates(self, element: ModelClass) -> Vector:
        """Cohomology coordinates of a cocycle over `representatives`."""
        if element.degree != self.degree:
            raise ValueError("class has the wrong degree")
        if not element.cocycle:
            raise ValueError("coordinates are defined for cocycles only")
        residual = self._coker.residual(element.base_part)
        base_coords = tuple(residual[j] for j in self._coset_indices)
        fiber_coords = tuple(element.fiber_part[j] for j in self._free_cols)
        return base_coords + fiber_coords


def model_cohomology(model: BundleModel, degree: int) -> ModelCohomology:
    """H^degree of the model; degrees outside [0, dim] are empty."""
    cached = model._cohomology.get(degree)
    if cached is None:
        cached = ModelCohomology(model, degree)
        model._cohomology[degree] = cached
    return cached


def betti(model: BundleModel) -> tuple[int, ...]:
    """Betti numbers b_0 .. b_{formal_dimension}."""
    return tuple(model_cohomology(model, k).dim
                 for k in range(model.formal_dimension + 1))


def representative_string(model: BundleModel, element: ModelClass) -> str:
    """The p + q*u form of a model class; re-parseable by class_from_string."""
    base = degree_basis(model.base, element.degree).polynomial(element.base_part)
    fiber = degree_basis(model.base,
                         element.degree - FIBER_DEGREE).polynomial(element.fiber_part)
    extended = model.base.generators + (model.u,)
    positions = tuple(range(len(model.base.generators)))
    u = GradedPolynomial.variable(extended, "u")
    combined = extend_generators(base, extended, positions) \
        + extend_generators(fiber, extended, positions) * u
    return format_polynomial(combined)
