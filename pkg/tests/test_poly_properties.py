"""Algebra laws of the graded product, checked on random inputs."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from wolfform.poly import (GradedPolynomial, Generator, format_polynomial,
                           monomials_of_degree, parse_polynomial)

GENS = (Generator("a", 2), Generator("u", 3), Generator("b", 4),
        Generator("v", 5))

coefficients = st.builds(Fraction, st.integers(-6, 6),
                         st.integers(1, 4))


@st.composite
def polynomials(draw):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        mono = tuple(draw(st.integers(0, 1 if g.is_odd else 3)) for g in GENS)
        terms[mono] = draw(coefficients)
    return GradedPolynomial.from_dict(GENS, terms)


@st.composite
def homogeneous_polynomials(draw):
    degree = draw(st.integers(0, 14))
    monos = monomials_of_degree(GENS, degree)
    if not monos:
        return GradedPolynomial.zero(GENS), degree
    terms = {draw(st.sampled_from(monos)): draw(coefficients)
             for _ in range(draw(st.integers(1, 3)))}
    return GradedPolynomial.from_dict(GENS, terms), degree


@settings(max_examples=150, deadline=None)
@given(polynomials(), polynomials(), polynomials())
def test_associativity_and_distributivity(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=150, deadline=None)
@given(homogeneous_polynomials(), homogeneous_polynomials())
def test_graded_commutativity(pd, qd):
    p, dp = pd
    q, dq = qd
    sign = -1 if (dp * dq) % 2 else 1
    assert p * q == (q * p) * sign


@settings(max_examples=150, deadline=None)
@given(polynomials())
def test_text_round_trip(p):
    assert parse_polynomial(format_polynomial(p), GENS) == p
