"""Built-in base spaces: cohomology presentations and degree-4 classes.

Families and their quotient presentations (generator degrees in brackets):

  gr-c n>=1      Q[l,x]/(s_{n+1}, s_{n+2})                 l[2]  x[4]
  gr-r n=2m>=6   Q[l,x,z]/(xz, z^2 - t_m, t_{m+1})         l[4]  x[4]  z[2m]
  gr-r n=4       Q[l,x,z]/(xz, z^2-l^2+x^2, l^3-2lx^2)     l[4]  x[4]  z[4]
  gr-r n=2m+1>=3 Q[l,x]/(t_{m+1}, t_{m+2})                 l[4]  x[4]
  gi             Q[x]/(x^3)                                x[4]
  fi             Q[x,y,z]/(three relations)                x[4]  y[8]  z[12]
  eii            Q[x,y,z,t]/(four relations)               x[4]  y[6]  z[8]  t[12]
  evi            Q[x,y,z]/(three relations)                x[4]  y[8]  z[12]
  eix            Q[x4,x12,x20]/(x12^4, x20^2, x4^15)       x4[4] x12[12] x20[20]

Here s_r is the even sequence s_0 = 1, s_1 = -l, s_r = -l s_{r-1} - x s_{r-2}
and t_r its variant with x^2 in place of x.  Spheres and real projective
spaces are recognized identifiers without ring arithmetic.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import (GradedPolynomial, Generator, ParseError,
                   extend_generators, parse_polynomial)
from .quotient import RingPresentation

__all__ = [
    "EII",
    "EIX",
    "EVI",
    "EulerClassSpec",
    "FI",
    "GI",
    "SpaceId",
    "UnsupportedSpaceError",
    "complex_grassmannian",
    "real_grassmannian",
    "divides_linear_bruteforce",
    "divides_linear_criterion",
    "format_euler",
    "format_space",
    "homogeneous_euler",
    "parse_euler",
    "parse_space",
    "presentation",
    "quaternionic_class",
    "sigma",
    "sigma_closed",
    "sigma_series_check",
]


class UnsupportedSpaceError(ValueError):
    """Operation asked of a space that carries no ring presentation."""


GRASSMANN_COMPLEX = "gr-c"
GRASSMANN_REAL_EVEN = "gr-r-even"
GRASSMANN_REAL_R8 = "gr-r8"
GRASSMANN_REAL_ODD = "gr-r-odd"
EXCEPTIONAL = ("gi", "fi", "eii", "evi", "eix")
SPHERE = "sphere"
REAL_PROJECTIVE = "rp"

_PARAM_RANGES = {
    GRASSMANN_COMPLEX: 1,      # n >= 1
    GRASSMANN_REAL_EVEN: 3,    # m >= 3
    GRASSMANN_REAL_ODD: 1,     # m >= 1
    SPHERE: 0,                 # k >= 0
    REAL_PROJECTIVE: 0,        # k >= 0
}


@dataclass(frozen=True)
class SpaceId:
    family: str
    param: int | None = None

    def __post_init__(self) -> None:
        if self.family in _PARAM_RANGES:
            if self.param is None or self.param < _PARAM_RANGES[self.family]:
                raise ValueError(
                    f"{self.family} parameter must be >= {_PARAM_RANGES[self.family]}, "
                    f"got {self.param}")
        elif self.family == GRASSMANN_REAL_R8 or self.family in EXCEPTIONAL:
            if self.param is not None:
                raise ValueError(f"{self.family} takes no parameter")
        else:
            raise ValueError(f"unknown space family {self.family!r}")

    @property
    def is_wolf_space(self) -> bool:
        return self.family not in (SPHERE, REAL_PROJECTIVE)


def complex_grassmannian(n: int) -> SpaceId:
    return SpaceId(GRASSMANN_COMPLEX, n)


def real_grassmannian(n: int) -> SpaceId:
    """Oriented 4-plane Grassmannian of R^{n+4}; dispatches on the parity of n."""
    if n < 3:
        raise ValueError(f"gr-r parameter must be >= 3, got {n}")
    if n == 4:
        return SpaceId(GRASSMANN_REAL_R8)
    if n % 2 == 0:
        return SpaceId(GRASSMANN_REAL_EVEN, n // 2)
    return SpaceId(GRASSMANN_REAL_ODD, (n - 1) // 2)


GI = SpaceId("gi")
FI = SpaceId("fi")
EII = SpaceId("eii")
EVI = SpaceId("evi")
EIX = SpaceId("eix")


_SPACE_RE = re.compile(r"^(gr-c|gr-r|sphere|rp):(n|k)=(-?\d+)$")


def parse_space(text: str) -> SpaceId:
    text = text.strip().lower()
    if text in EXCEPTIONAL:
        return SpaceId(text)
    m = _SPACE_RE.match(text)
    if not m:
        raise ParseError(f"unrecognized space {text!r}")
    head, key, value = m.group(1), m.group(2), int(m.group(3))
    if head in ("gr-c", "gr-r") and key != "n":
        raise ParseError(f"{head} takes n=<int>")
    if head in ("sphere", "rp") and key != "k":
        raise ParseError(f"{head} takes k=<int>")
    try:
        if head == "gr-c":
            return complex_grassmannian(value)
        if head == "gr-r":
            return real_grassmannian(value)
        if head == "sphere":
            return SpaceId(SPHERE, value)
        return SpaceId(REAL_PROJECTIVE, value)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_space(space: SpaceId) -> str:
    if space.family == GRASSMANN_COMPLEX:
        return f"gr-c:n={space.param}"
    if space.family == GRASSMANN_REAL_EVEN:
        return f"gr-r:n={2 * space.param}"
    if space.family == GRASSMANN_REAL_R8:
        return "gr-r:n=4"
    if space.family == GRASSMANN_REAL_ODD:
        return f"gr-r:n={2 * space.param + 1}"
    if space.family == SPHERE:
        return f"sphere:k={space.param}"
    if space.family == REAL_PROJECTIVE:
        return f"rp:k={space.param}"
    return space.family


# -- the sigma sequences ------------------------------------------------------

_SIGMA_GENS = {
    "complex": (Generator("l", 2), Generator("x", 4)),
    "real": (Generator("l", 4), Generator("x", 4)),
}


def _check_variant(variant: str) -> None:
    if variant not in _SIGMA_GENS:
        raise ValueError(f"variant must be 'complex' or 'real', got {variant!r}")


@lru_cache(maxsize=None)
def sigma(r: int, variant: str = "complex") -> GradedPolynomial:
    """r-th class of the defining recursion, in generators l, x."""
    _check_variant(variant)
    if r < 0:
        raise ValueError("sigma index must be nonnegative")
    gens = _SIGMA_GENS[variant]
    if r == 0:
        return GradedPolynomial.constant(gens, 1)
    l = GradedPolynomial.variable(gens, "l")
    if r == 1:
        return -l
    x = GradedPolynomial.variable(gens, "x")
    xterm = x * x if variant == "real" else x
    return -(l * sigma(r - 1, variant)) - xterm * sigma(r - 2, variant)


def sigma_closed(r: int, variant: str = "complex") -> GradedPolynomial:
    """Binomial closed form; agrees with `sigma` in every degree."""
    _check_variant(variant)
    if r < 0:
        raise ValueError("sigma index must be nonnegative")
    gens = _SIGMA_GENS[variant]
    coeffs = {}
    for k in range(r // 2 + 1):
        xexp = 2 * k if variant == "real" else k
        sign = -1 if (r + k) % 2 else 1
        coeffs[(r - 2 * k, xexp)] = Fraction(sign * math.comb(r - k, k))
    return GradedPolynomial.from_dict(gens, coeffs)


def sigma_series_check(order: int, variant: str = "real") -> bool:
    """Truncated generating-function identity for the sigma sequence.

    Multiplies 1 + l t + x^2 t^2 (real; x t^2 for complex) against the
    series of sigma classes and checks the product is 1 through t^order.
    """
    _check_variant(variant)
    if order < 1:
        raise ValueError("order must be >= 1")
    gens = _SIGMA_GENS[variant]
    l = GradedPolynomial.variable(gens, "l")
    x = GradedPolynomial.variable(gens, "x")
    quad = x * x if variant == "real" else x
    series = [sigma(r, variant) for r in range(order + 1)]
    for s in range(order + 1):
        total = series[s]
        if s >= 1:
            total = total + l * series[s - 1]
        if s >= 2:
            total = total + quad * series[s - 2]
        expected = GradedPolynomial.constant(gens, 1 if s == 0 else 0)
        if total != expected:
            return False
    return True


def divides_linear_bruteforce(a: Fraction | int, b: Fraction | int, r: int) -> bool:
    """Whether a*l + b*x divides the r-th real sigma class, by substitution.

    For b != 0 substitute x = -(a/b) l and check the result vanishes
    identically; for b = 0 check no term survives setting l = 0.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        raise ValueError("(a, b) must be nonzero")
    if r < 0:
        raise ValueError("index must be nonnegative")
    poly = sigma(r, "real")
    if b == 0:
        return all(lexp > 0 for (lexp, _), _ in poly.terms)
    ratio = -a / b
    collapsed: dict[int, Fraction] = {}
    for (lexp, xexp), coeff in poly.terms:
        power = lexp + xexp
        collapsed[power] = collapsed.get(power, Fraction(0)) + coeff * ratio ** xexp
    return all(v == 0 for v in collapsed.values())


def divides_linear_criterion(a: Fraction | int, b: Fraction | int, r: int) -> bool:
    """Closed-form divisor test: b = 0 with r odd, or |a| = |b| with r = 2 mod 3."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        raise ValueError("(a, b) must be nonzero")
    if r < 0:
        raise ValueError("index must be nonnegative")
    if b == 0:
        return r % 2 == 1
    return abs(a) == abs(b) and r % 3 == 2


# -- presentations ------------------------------------------------------------


@lru_cache(maxsize=None)
def presentation(space: SpaceId) -> RingPresentation:
    """Quotient presentation of the base cohomology ring.

    The eix quotient carries the relation x4^15 on top of x12^4 and x20^2;
    without it the quotient would not be finite-dimensional (formal
    dimension 112, total dimension 120, Poincare duality).
    """
    if not space.is_wolf_space:
        raise UnsupportedSpaceError(
            f"{format_space(space)} carries no ring presentation")

    if space.family == GRASSMANN_COMPLEX:
        n = space.param
        gens = _SIGMA_GENS["complex"]
        return RingPresentation(gens, (sigma(n + 1), sigma(n + 2)), 4 * n)

    if space.family == GRASSMANN_REAL_ODD:
        m = space.param
        gens = _SIGMA_GENS["real"]
        return RingPresentation(
            gens, (sigma(m + 1, "real"), sigma(m + 2, "real")), 8 * m + 4)

    if space.family == GRASSMANN_REAL_EVEN:
        m = space.param
        gens = (Generator("l", 4), Generator("x", 4), Generator("z", 2 * m))
        x = GradedPolynomial.variable(gens, "x")
        z = GradedPolynomial.variable(gens, "z")
        sig_m = extend_generators(sigma(m, "real"), gens, (0, 1))
        sig_m1 = extend_generators(sigma(m + 1, "real"), gens, (0, 1))
        return RingPresentation(gens, (x * z, z * z - sig_m, sig_m1), 8 * m)

    if space.family == GRASSMANN_REAL_R8:
        gens = (Generator("l", 4), Generator("x", 4), Generator("z", 4))
        rel = lambda s: parse_polynomial(s, gens)
        return RingPresentation(
            gens, (rel("x*z"), rel("z^2 - l^2 + x^2"), rel("l^3 - 2*l*x^2")), 16)

    if space.family == "gi":
        gens = (Generator("x", 4),)
        return RingPresentation(gens, (parse_polynomial("x^3", gens),), 8)

    if space.family == "fi":
        gens = (Generator("x", 4), Generator("y", 8), Generator("z", 12))
        rel = lambda s: parse_polynomial(s, gens)
        return RingPresentation(
            gens,
            (rel("x^3 - 12*x*y + 8*z"), rel("x*z - 3*y^2"), rel("y^3 - z^2")),
            28)

    if space.family == "eii":
        gens = (Generator("x", 4), Generator("y", 6), Generator("z", 8),
                Generator("t", 12))
        rel = lambda s: parse_polynomial(s, gens)
        return RingPresentation(
            gens,
            (rel("y^2 - 8*t - 6*z*x + x^3"),
             rel("x^4 + 12*x*t - 6*x^2*z - 3*z^2"),
             rel("y*t"),
             rel("t^2 + z^3 - 3/2*x*z*t")),
            40)

    if space.family == "evi":
        gens = (Generator("x", 4), Generator("y", 8), Generator("z", 12))
        rel = lambda s: parse_polynomial(s, gens)
        return RingPresentation(
            gens,
            (rel("-2*x^4*y + 2*x^3*z - 3*x*y*z + 1/8*y^3 + 3*z^2"),
             rel("x^7 - x^5*y + 4*x^4*z - 3/2*x^3*y^2 - 3/8*x*y^3 + 3*x*z^2"
                 " - 3/4*y^2*z"),
             rel("4*x^7*y + 3*x^5*y^2 + 8*x^4*y*z + x^3*y^3 + 4*x^3*z^2"
                 " + 6*x^2*y^2*z + 3/16*x*y^4 + 3/8*y^3*z + 8*z^3")),
            64)

    if space.family == "eix":
        gens = (Generator("x4", 4), Generator("x12", 12), Generator("x20", 20))
        rel = lambda s: parse_polynomial(s, gens)
        return RingPresentation(
            gens, (rel("x12^4"), rel("x20^2"), rel("x4^15")), 112)

    raise UnsupportedSpaceError(f"no presentation for {space.family!r}")


def quaternionic_class(space: SpaceId) -> GradedPolynomial:
    """The degree-4 class of the quaternionic Kaehler form in the base ring."""
    if not space.is_wolf_space:
        raise UnsupportedSpaceError(
            f"{format_space(space)} has no quaternionic class")
    ring = presentation(space)
    if space.family == GRASSMANN_COMPLEX:
        return parse_polynomial("l^2 - 4*x", ring.generators)
    if space.family in (GRASSMANN_REAL_EVEN, GRASSMANN_REAL_R8, GRASSMANN_REAL_ODD):
        return parse_polynomial("l + 2*x", ring.generators)
    # exceptional spaces: the degree-4 generator, coefficient one
    name = ring.generators[0].name
    return GradedPolynomial.variable(ring.generators, name)


# -- Euler class specifications ----------------------------------------------

@dataclass(frozen=True)
class EulerClassSpec:
    """Degree-4 class coefficients over the family's degree-4 monomials.

    gr-c: a*l^2 + b*x; gr-r even/odd: a*l + b*x; gr-r n=4: a*l + b*x + c*z;
    exceptional: a times the degree-4 generator.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def scaled(self, factor: Fraction | int) -> "EulerClassSpec":
        f = Fraction(factor)
        return EulerClassSpec(self.a * f, self.b * f, self.c * f)

    def to_polynomial(self, space: SpaceId) -> GradedPolynomial:
        ring = presentation(space)
        gens = ring.generators
        if space.family == GRASSMANN_COMPLEX:
            if self.c:
                raise ValueError("gr-c Euler class takes only a, b")
            l = GradedPolynomial.variable(gens, "l")
            x = GradedPolynomial.variable(gens, "x")
            return l * l * self.a + x * self.b
        if space.family in (GRASSMANN_REAL_EVEN, GRASSMANN_REAL_ODD):
            if self.c:
                raise ValueError("this family's Euler class takes only a, b")
            l = GradedPolynomial.variable(gens, "l")
            x = GradedPolynomial.variable(gens, "x")
            return l * self.a + x * self.b
        if space.family == GRASSMANN_REAL_R8:
            l = GradedPolynomial.variable(gens, "l")
            x = GradedPolynomial.variable(gens, "x")
            z = GradedPolynomial.variable(gens, "z")
            return l * self.a + x * self.b + z * self.c
        if space.family in EXCEPTIONAL:
            if self.b or self.c:
                raise ValueError("exceptional Euler class takes only a")
            return GradedPolynomial.variable(gens, gens[0].name) * self.a
        raise UnsupportedSpaceError(
            f"{format_space(space)} has no Euler class data")


def homogeneous_euler(space: SpaceId) -> EulerClassSpec:
    """Euler class of the homogeneous bundle: -1/4 of the quaternionic class."""
    if not space.is_wolf_space:
        raise UnsupportedSpaceError(
            f"{format_space(space)} has no homogeneous Euler class")
    q = Fraction(-1, 4)
    if space.family == GRASSMANN_COMPLEX:
        return EulerClassSpec(q, Fraction(1))          # -1/4 (l^2 - 4x)
    if space.family in (GRASSMANN_REAL_EVEN, GRASSMANN_REAL_R8, GRASSMANN_REAL_ODD):
        return EulerClassSpec(q, Fraction(-1, 2))      # -1/4 (l + 2x)
    return EulerClassSpec(q)                           # -1/4 x


_EULER_RE = re.compile(r"^([abc])=(-?\d+(?:/\d+)?)$")


def parse_euler(text: str) -> EulerClassSpec | None:
    """Parse 'a=<rat>,b=<rat>[,c=<rat>]'; None means 'homogeneous'."""
    text = text.strip().lower()
    if text == "homogeneous":
        return None
    values = {}
    for part in text.split(","):
        m = _EULER_RE.match(part.strip())
        if not m:
            raise ParseError(f"bad Euler coefficient {part.strip()!r}")
        key = m.group(1)
        if key in values:
            raise ParseError(f"duplicate coefficient {key!r}")
        values[key] = Fraction(m.group(2))
    if "a" not in values:
        raise ParseError("Euler class needs at least a=<rational>")
    return EulerClassSpec(values["a"], values.get("b", Fraction(0)),
                          values.get("c", Fraction(0)))


def format_euler(spec: EulerClassSpec, space: SpaceId | None = None) -> str:
    parts = [f"a={spec.a}"]
    if space is None or space.family not in EXCEPTIONAL:
        parts.append(f"b={spec.b}")
    if spec.c or (space is not None and space.family == GRASSMANN_REAL_R8):
        parts.append(f"c={spec.c}")
    return ",".join(parts)
