"""Exact graded-commutative polynomials over named, graded generators.

Coefficients are `fractions.Fraction`, monomials are exponent tuples over a
fixed ordered generator list.  Odd-degree generators square to zero and
pick up the Koszul sign when they move past each other; even generators are
central.  Everything is immutable and hashable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

__all__ = [
    "Generator",
    "GradedPolynomial",
    "ParseError",
    "extend_generators",
    "format_polynomial",
    "monomial_degree",
    "monomials_of_degree",
    "parse_polynomial",
]

F0 = Fraction(0)
F1 = Fraction(1)

Mono = tuple[int, ...]


class ParseError(ValueError):
    """Raised for malformed polynomial / spec strings."""


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    def __post_init__(self) -> None:
        if self.degree <= 0:
            raise ValueError(f"generator {self.name!r} must have positive degree")

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


def monomial_degree(generators: tuple[Generator, ...], exponents: Mono) -> int:
    return sum(g.degree * e for g, e in zip(generators, exponents))


def _term_sort_key(generators: tuple[Generator, ...], exponents: Mono):
    # Graded-lexicographic, largest first within a degree.
    return (-monomial_degree(generators, exponents),) + tuple(-e for e in exponents)


def _koszul(generators: tuple[Generator, ...], e1: Mono, e2: Mono):
    """Combine exponent vectors; return (sign, exponents) or None if zero."""
    out = []
    sign = 1
    seen_odd2 = 0  # odd generators of e2 already passed over, by position
    for i, g in enumerate(generators):
        a, b = e1[i], e2[i]
        if g.is_odd:
            if a + b > 1:
                return None
            if a and seen_odd2 % 2:
                sign = -sign
            if b:
                seen_odd2 += 1
        out.append(a + b)
    return sign, tuple(out)


@dataclass(frozen=True)
class GradedPolynomial:
    """Sparse sum of monomials with rational coefficients."""

    generators: tuple[Generator, ...]
    terms: tuple[tuple[Mono, Fraction], ...]

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_dict(generators: tuple[Generator, ...],
                  coeffs: Mapping[Mono, Fraction | int]) -> "GradedPolynomial":
        cleaned = {}
        n = len(generators)
        for mono, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono!r}")
            if any(g.is_odd and e > 1 for g, e in zip(generators, mono)):
                continue  # odd generator squared
            cleaned[mono] = cleaned.get(mono, F0) + c
        terms = tuple(sorted(((m, c) for m, c in cleaned.items() if c != 0),
                             key=lambda t: _term_sort_key(generators, t[0])))
        return GradedPolynomial(generators, terms)

    @staticmethod
    def zero(generators: tuple[Generator, ...]) -> "GradedPolynomial":
        return GradedPolynomial(generators, ())

    @staticmethod
    def constant(generators: tuple[Generator, ...], c: Fraction | int) -> "GradedPolynomial":
        return GradedPolynomial.from_dict(generators, {(0,) * len(generators): Fraction(c)})

    @staticmethod
    def monomial(generators: tuple[Generator, ...], exponents: Mono,
                 coeff: Fraction | int = 1) -> "GradedPolynomial":
        return GradedPolynomial.from_dict(generators, {tuple(exponents): Fraction(coeff)})

    @staticmethod
    def variable(generators: tuple[Generator, ...], name: str) -> "GradedPolynomial":
        for i, g in enumerate(generators):
            if g.name == name:
                exps = tuple(1 if j == i else 0 for j in range(len(generators)))
                return GradedPolynomial.monomial(generators, exps)
        raise ValueError(f"unknown generator {name!r}")

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: Mono) -> Fraction:
        for m, c in self.terms:
            if m == exponents:
                return c
        return F0

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms; None for the zero polynomial.

        Raises ValueError if the terms have mixed degrees.
        """
        if not self.terms:
            return None
        degrees = {monomial_degree(self.generators, m) for m, _ in self.terms}
        if len(degrees) > 1:
            raise ValueError(f"polynomial has mixed degrees {sorted(degrees)}")
        return degrees.pop()

    @property
    def is_homogeneous(self) -> bool:
        try:
            self.homogeneous_degree()
        except ValueError:
            return False
        return True

    # -- arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: "GradedPolynomial") -> None:
        if self.generators != other.generators:
            raise ValueError("polynomials over different generator lists")

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        self._check_compatible(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, F0) + c
        return GradedPolynomial.from_dict(self.generators, acc)

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self + (-other)

    def __neg__(self) -> "GradedPolynomial":
        return GradedPolynomial(self.generators,
                                tuple((m, -c) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other)
        acc: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                combined = _koszul(self.generators, m1, m2)
                if combined is None:
                    continue
                sign, mono = combined
                acc[mono] = acc.get(mono, F0) + sign * c1 * c2
        return GradedPolynomial.from_dict(self.generators, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Fraction | int) -> "GradedPolynomial":
        c = Fraction(c)
        if c == 0:
            return GradedPolynomial.zero(self.generators)
        return GradedPolynomial(self.generators,
                                tuple((m, c * coeff) for m, coeff in self.terms))

    def __pow__(self, n: int) -> "GradedPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = GradedPolynomial.constant(self.generators, 1)
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"GradedPolynomial({format_polynomial(self)!r})"


def extend_generators(p: GradedPolynomial, generators: tuple[Generator, ...],
                      positions: tuple[int, ...]) -> GradedPolynomial:
    """Reinterpret p over a larger generator list.

    positions[i] is the index in `generators` of p's i-th generator.
    """
    width = len(generators)
    coeffs = {}
    for mono, coeff in p.terms:
        out = [0] * width
        for old, e in enumerate(mono):
            out[positions[old]] = e
        coeffs[tuple(out)] = coeff
    return GradedPolynomial.from_dict(generators, coeffs)


@lru_cache(maxsize=None)
def monomials_of_degree(generators: tuple[Generator, ...], degree: int) -> tuple[Mono, ...]:
    """All exponent vectors of the given total degree, graded-lex order.

    Odd generators are capped at exponent one.  Lex order is descending on
    the exponent vector, following the declared generator order.
    """
    if degree < 0:
        return ()

    def rec(i: int, remaining: int):
        if i == len(generators):
            if remaining == 0:
                yield ()
            return
        g = generators[i]
        top = remaining // g.degree
        if g.is_odd:
            top = min(top, 1)
        for e in range(top, -1, -1):
            for rest in rec(i + 1, remaining - e * g.degree):
                yield (e,) + rest

    return tuple(rec(0, degree))


# -- text form ---------------------------------------------------------------
#
# terms joined by + / -; term = [rational *]? gen (^int)? products joined
# by *; rational = p/q or integer.  Example: "l^2 - 4*x", "-1/4*l - 1/2*x".

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([+\-*/^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character at {text[pos:]!r}")
            break
        if m.group(1):
            tokens.append(("num", int(m.group(1))))
        elif m.group(2):
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


def parse_polynomial(text: str, generators: tuple[Generator, ...]) -> GradedPolynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    index = {g.name: i for i, g in enumerate(generators)}
    n = len(generators)
    acc: dict[Mono, Fraction] = {}
    pos = 0

    def take_number() -> Fraction:
        nonlocal pos
        kind, value = tokens[pos]
        if kind != "num":
            raise ParseError(f"expected number, got {value!r}")
        pos += 1
        if pos < len(tokens) and tokens[pos] == ("op", "/"):
            pos += 1
            if pos >= len(tokens) or tokens[pos][0] != "num":
                raise ParseError("expected denominator")
            denom = tokens[pos][1]
            pos += 1
            if denom == 0:
                raise ParseError("zero denominator")
            return Fraction(value, denom)
        return Fraction(value)

    while pos < len(tokens):
        sign = 1
        if tokens[pos] == ("op", "+"):
            pos += 1
        elif tokens[pos] == ("op", "-"):
            sign = -1
            pos += 1
        coeff = Fraction(sign)
        exps = [0] * n
        expect_factor = True
        while expect_factor:
            if pos >= len(tokens):
                raise ParseError("dangling operator")
            kind, value = tokens[pos]
            if kind == "num":
                coeff *= take_number()
            elif kind == "name":
                if value not in index:
                    raise ParseError(f"unknown generator {value!r}")
                pos += 1
                power = 1
                if pos < len(tokens) and tokens[pos] == ("op", "^"):
                    pos += 1
                    if pos >= len(tokens) or tokens[pos][0] != "num":
                        raise ParseError("expected exponent")
                    power = tokens[pos][1]
                    pos += 1
                    if power <= 0:
                        raise ParseError("exponent must be positive")
                exps[index[value]] += power
            else:
                raise ParseError(f"unexpected {value!r}")
            if pos < len(tokens) and tokens[pos] == ("op", "*"):
                pos += 1
            else:
                expect_factor = False
        mono = tuple(exps)
        if any(g.is_odd and e > 1 for g, e in zip(generators, mono)):
            raise ParseError("odd generator raised to a power above one")
        acc[mono] = acc.get(mono, F0) + coeff

    return GradedPolynomial.from_dict(generators, acc)


def _format_monomial(generators: tuple[Generator, ...], mono: Mono) -> str:
    parts = []
    for g, e in zip(generators, mono):
        if e == 0:
            continue
        parts.append(g.name if e == 1 else f"{g.name}^{e}")
    return "*".join(parts)


def format_polynomial(p: GradedPolynomial) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for i, (mono, coeff) in enumerate(p.terms):
        mono_str = _format_monomial(p.generators, mono)
        mag = abs(coeff)
        if not mono_str:
            body = str(mag)
        elif mag == 1:
            body = mono_str
        else:
            body = f"{mag}*{mono_str}"
        if i == 0:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"{' + ' if coeff > 0 else ' - '}{body}")
    return "".join(pieces)
