from fractions import Fraction

import pytest

from wolfform.poly import (GradedPolynomial, Generator, ParseError,
                           format_polynomial, monomials_of_degree,
                           parse_polynomial)

L = Generator("l", 2)
X = Generator("x", 4)
U = Generator("u", 3)
GENS = (L, X)
GENS_U = (L, X, U)


def P(text, gens=GENS):
    return parse_polynomial(text, gens)


def test_even_generator_squares():
    assert P("l") * P("l") == P("l^2")


def test_odd_generator_squares_to_zero():
    u = parse_polynomial("u", GENS_U)
    assert (u * u).is_zero


def test_product_of_conjugates():
    # (l - x)(l + x) = l^2 - x^2, the first real sigma relation shape
    assert P("l - x") * P("l + x") == P("l^2 - x^2")


def test_product_collects_cross_terms():
    assert P("l + x") * P("l + x") == P("l^2 + 2*l*x + x^2")


def test_scalar_and_negation():
    p = P("l^2 - 4*x")
    assert p * Fraction(-1, 4) == P("-1/4*l^2 + x")
    assert -p + p == GradedPolynomial.zero(GENS)


def test_koszul_sign_for_two_odd_generators():
    gens = (Generator("s", 3), Generator("t", 5))
    s = parse_polynomial("s", gens)
    t = parse_polynomial("t", gens)
    assert s * t == -(t * s)
    assert (s * t) * (s * t) == GradedPolynomial.zero(gens)


def test_even_odd_commute():
    p = parse_polynomial("x", GENS_U)
    u = parse_polynomial("u", GENS_U)
    assert p * u == u * p


def test_homogeneous_degree():
    assert P("l^2 - 4*x").homogeneous_degree() == 4
    assert GradedPolynomial.zero(GENS).homogeneous_degree() is None
    with pytest.raises(ValueError):
        P("l + x").homogeneous_degree()


def test_mismatched_generator_lists_rejected():
    other = parse_polynomial("l", (L,))
    with pytest.raises(ValueError):
        P("l") * other


def test_monomials_of_degree_order():
    # graded-lex, largest exponent vector first
    assert monomials_of_degree(GENS, 4) == ((2, 0), (0, 1))
    assert monomials_of_degree(GENS, 6) == ((3, 0), (1, 1))
    assert monomials_of_degree(GENS, 5) == ()
    assert monomials_of_degree(GENS_U, 7) == ((2, 0, 1), (0, 1, 1))


def test_monomials_cap_odd_exponent():
    assert all(m[2] <= 1 for m in monomials_of_degree(GENS_U, 13))


def test_parse_examples():
    p = P("l^2 - 4*x")
    assert p.coefficient((2, 0)) == 1
    assert p.coefficient((0, 1)) == -4
    q = P("-1/4*l - 1/2*x")
    assert q.coefficient((1, 0)) == Fraction(-1, 4)
    assert q.coefficient((0, 1)) == Fraction(-1, 2)


def test_parse_whitespace_insensitive():
    assert P(" l^2-4*x ") == P("l^2 - 4*x")


def test_parse_rejects_garbage():
    for bad in ("", "l +", "q", "l^0", "2//3", "l^2 $ x"):
        with pytest.raises(ParseError):
            P(bad)


def test_format_round_trip():
    for text in ("l^2 - 4*x", "-1/4*l - 1/2*x", "0", "3", "-l", "x^2",
                 "2*l^3*x - 7/5*x^2"):
        p = P(text)
        assert parse_polynomial(format_polynomial(p), GENS) == p


def test_format_canonical():
    assert format_polynomial(P("-4*x + l^2")) == "l^2 - 4*x"
    assert format_polynomial(GradedPolynomial.zero(GENS)) == "0"
