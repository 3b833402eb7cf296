"""Formality classification of 3-sphere bundles over the built-in spaces.

Decision table, with e the Euler class in the family's coefficients:

  gr-c n:      b != 0 formal (Thm4.3); b = 0 formal iff n odd or a = 0,
               else witness <l, l, x^(n/2)>                       (Thm4.4)
  gr-r n=2m:   non-formal iff (m odd, b = 0, a != 0) or
               (m = 2 mod 3, |a| = |b| != 0); witness <x, z, z>   (Thm5.4)
  gr-r n=4:    non-formal iff (|a|=|b| != 0, |c| != |a|) or
               (|a|=|c| != 0, |b| != |a|); witness <xi_i, xi_i, xi_j>
               with xi_1 = l - x + z, xi_2 = -l - x + z            (Thm5.5)
  gr-r odd n:  formal                                              (Thm5.6)
  exceptional: formal                                              (Sec6)
  sphere / rp: formal                                              (SphereRP)
  e = 0:       rationally a product, formal                        (ProductModel)

Every non-formal verdict carries a machine-checked Massey witness; the
witness classes for gr-r n=4 are transported through the sign-flip ring
automorphisms that normalize a, b, c to be nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .massey import MasseyResult, triple_massey
from .model import (BundleModel, ModelClass, build_model,
                    class_from_polynomials)
from .poly import parse_polynomial
from .quotient import normal_form
from .spaces import (EXCEPTIONAL, GRASSMANN_COMPLEX, GRASSMANN_REAL_EVEN,
                     GRASSMANN_REAL_ODD, GRASSMANN_REAL_R8, EulerClassSpec,
                     SpaceId, presentation)

__all__ = ["CrossCheckPoint", "CrossCheckReport", "Verdict",
           "alpha_coefficients", "classify", "cross_check"]

THM_COMPLEX_GENERIC = "Thm4.3"
THM_COMPLEX_SQUARE = "Thm4.4"
THM_REAL_EVEN = "Thm5.4"
THM_REAL_R8 = "Thm5.5"
THM_REAL_ODD = "Thm5.6"
SEC_EXCEPTIONAL = "Sec6"
PRODUCT_MODEL = "ProductModel"
SPHERE_RP = "SphereRP"


@dataclass(frozen=True)
class Verdict:
    space: SpaceId
    euler: EulerClassSpec | None
    formal: bool
    justification: str
    witness: MasseyResult | None = None


def _sign(value: Fraction) -> int:
    return -1 if value < 0 else 1


def alpha_coefficients(a: Fraction | int, b: Fraction | int,
                       c: Fraction | int) -> tuple[Fraction, Fraction]:
    """(alpha_1, alpha_2) = (1/2 (a-b)(a+c), 1/2 (a+b)(a-c)) for gr-r n=4.

    Also re-verifies, inside the quotient ring, the identity
    alpha_1 xi_1^2 + alpha_2 xi_2^2 = 2(a l - c x - b z)(a l + b x + c z).
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    alpha1 = Fraction(1, 2) * (a - b) * (a + c)
    alpha2 = Fraction(1, 2) * (a + b) * (a - c)
    ring = presentation(SpaceId(GRASSMANN_REAL_R8))
    poly = lambda t: parse_polynomial(t, ring.generators)
    xi1, xi2 = poly("l - x + z"), poly("-l - x + z")
    lhs = xi1 * xi1 * alpha1 + xi2 * xi2 * alpha2
    rhs = ((poly("l") * a - poly("x") * c - poly("z") * b)
           * (poly("l") * a + poly("x") * b + poly("z") * c)) * 2
    diff = lhs - rhs
    if not diff.is_zero and any(normal_form(ring, diff)):
        raise AssertionError(
            f"square-class identity fails for (a,b,c)=({a},{b},{c})")
    return alpha1, alpha2


def _witness_classes(space: SpaceId, euler: EulerClassSpec,
                     model: BundleModel) -> tuple[ModelClass, ModelClass, ModelClass] | None:
    """The family's Massey witness triple for this Euler class, if any."""
    gens = model.base.generators
    poly = lambda t: parse_polynomial(t, gens)
    cls = lambda p: class_from_polynomials(model, p)
    if space.family == GRASSMANN_COMPLEX:
        n = space.param
        if n % 2:
            return None
        l = cls(poly("l"))
        return l, l, cls(poly("x") ** (n // 2))
    if space.family == GRASSMANN_REAL_EVEN:
        return cls(poly("x")), cls(poly("z")), cls(poly("z"))
    if space.family == GRASSMANN_REAL_R8:
        # transport xi_1, xi_2 through l -> sgn(a) l etc., which maps the
        # given Euler class to the normalized |a| l + |b| x + |c| z
        sl, sx, sz = _sign(euler.a), _sign(euler.b), _sign(euler.c)
        l, x, z = poly("l") * sl, poly("x") * sx, poly("z") * sz
        xi1 = cls(l - x + z)
        xi2 = cls(-l - x + z)
        alpha1, alpha2 = alpha_coefficients(abs(euler.a), abs(euler.b),
                                            abs(euler.c))
        if alpha1 == 0 and alpha2 != 0:
            return xi2, xi2, xi1
        return xi1, xi1, xi2
    return None


def _attach_witness(space: SpaceId, euler: EulerClassSpec,
                    justification: str) -> Verdict:
    model = build_model(space, euler)
    triple = _witness_classes(space, euler, model)
    witness = triple_massey(model, *triple) if triple else None
    if witness is None or witness.trivial:
        raise AssertionError(
            f"non-formal verdict for {space} with {euler} lacks a witness")
    return Verdict(space, euler, False, justification, witness)


def classify(space: SpaceId, euler: EulerClassSpec | None = None) -> Verdict:
    """Formality verdict for the bundle with the given Euler class.

    Spheres and real projective spaces ignore the Euler class.  Non-formal
    verdicts carry the recomputed, non-trivial Massey witness.
    """
    if not space.is_wolf_space:
        return Verdict(space, euler, True, SPHERE_RP)
    if euler is None:
        raise ValueError("Wolf-space classification needs an Euler class")
    if euler.is_zero:
        euler.to_polynomial(space)  # validate coefficient arity
        return Verdict(space, euler, True, PRODUCT_MODEL)
    a, b, c = euler.a, euler.b, euler.c

    if space.family == GRASSMANN_COMPLEX:
        euler.to_polynomial(space)
        if b != 0:
            return Verdict(space, euler, True, THM_COMPLEX_GENERIC)
        if space.param % 2 == 1 or a == 0:
            return Verdict(space, euler, True, THM_COMPLEX_SQUARE)
        return _attach_witness(space, euler, THM_COMPLEX_SQUARE)

    if space.family == GRASSMANN_REAL_EVEN:
        euler.to_polynomial(space)
        m = space.param
        nonformal = ((m % 2 == 1 and b == 0 and a != 0)
                     or (m % 3 == 2 and abs(a) == abs(b) != 0))
        if not nonformal:
            return Verdict(space, euler, True, THM_REAL_EVEN)
        return _attach_witness(space, euler, THM_REAL_EVEN)

    if space.family == GRASSMANN_REAL_R8:
        aa, bb, cc = abs(a), abs(b), abs(c)
        nonformal = ((aa == bb != 0 and cc != aa)
                     or (aa == cc != 0 and bb != aa))
        if not nonformal:
            return Verdict(space, euler, True, THM_REAL_R8)
        return _attach_witness(space, euler, THM_REAL_R8)

    if space.family == GRASSMANN_REAL_ODD:
        euler.to_polynomial(space)
        return Verdict(space, euler, True, THM_REAL_ODD)

    if space.family in EXCEPTIONAL:
        euler.to_polynomial(space)
        return Verdict(space, euler, True, SEC_EXCEPTIONAL)

    raise ValueError(f"unclassifiable space {space!r}")


@dataclass(frozen=True)
class CrossCheckPoint:
    euler: EulerClassSpec
    formal: bool
    justification: str
    witness_defined: bool
    witness_trivial: bool | None
    ok: bool
    note: str = ""


@dataclass(frozen=True)
class CrossCheckReport:
    space: SpaceId
    points: tuple[CrossCheckPoint, ...]

    @property
    def all_ok(self) -> bool:
        return all(p.ok for p in self.points)

    @property
    def failures(self) -> tuple[CrossCheckPoint, ...]:
        return tuple(p for p in self.points if not p.ok)


def _candidate_triples(space: SpaceId, euler: EulerClassSpec,
                       model: BundleModel):
    """All witness triples worth testing at a grid point."""
    if space.family == GRASSMANN_REAL_R8:
        gens = model.base.generators
        poly = lambda t: parse_polynomial(t, gens)
        sl, sx, sz = _sign(euler.a), _sign(euler.b), _sign(euler.c)
        l, x, z = poly("l") * sl, poly("x") * sx, poly("z") * sz
        xi1 = class_from_polynomials(model, l - x + z)
        xi2 = class_from_polynomials(model, -l - x + z)
        return [(xi1, xi1, xi2), (xi2, xi2, xi1)]
    triple = _witness_classes(space, euler, model)
    return [triple] if triple else []


def cross_check(space: SpaceId,
                grid: Iterable[EulerClassSpec]) -> CrossCheckReport:
    """Replay the decision table against the Massey engine on a grid.

    Non-formal points must produce a non-trivial witness recomputed from
    scratch; at formal points every defined candidate witness must be
    trivial.  Any mismatch is reported with the offending parameters.
    """
    points = []
    for euler in grid:
        verdict = classify(space, euler)
        if not verdict.formal:
            model = build_model(space, euler)
            triple = _witness_classes(space, euler, model)
            recomputed = triple_massey(model, *triple) if triple else None
            defined = recomputed is not None
            trivial = recomputed.trivial if defined else None
            ok = defined and not trivial
            note = "" if ok else "missing or trivial witness"
        else:
            model = build_model(space, euler)
            defined = False
            trivial = None
            ok = True
            note = ""
            for triple in _candidate_triples(space, euler, model):
                candidate = triple_massey(model, *triple)
                if candidate is None:
                    continue
                defined = True
                trivial = candidate.trivial
                if not candidate.trivial:
                    ok = False
                    note = "non-trivial witness at a formal point"
                    break
        points.append(CrossCheckPoint(euler, verdict.formal,
                                      verdict.justification, defined,
                                      trivial, ok, note))
    return CrossCheckReport(space, tuple(points))
