from fractions import Fraction

import pytest

from wolfform.classify import (alpha_coefficients, classify, cross_check)
from wolfform.massey import is_trivial
from wolfform.spaces import (EII, EIX, EVI, FI, GI, EulerClassSpec, SpaceId,
                             complex_grassmannian, homogeneous_euler,
                             real_grassmannian)

EXCEPTIONAL = (GI, FI, EII, EVI, EIX)


def grid2(lo, hi):
    return [EulerClassSpec(a, b)
            for a in range(lo, hi + 1) for b in range(lo, hi + 1)]


def test_complex_generic_formal():
    for n in (1, 2, 4, 7):
        verdict = classify(complex_grassmannian(n), EulerClassSpec(3, -2))
        assert verdict.formal and verdict.justification == "Thm4.3"


def test_complex_square_table():
    for n, formal in ((1, True), (2, False), (3, True), (4, False),
                      (5, True), (6, False)):
        verdict = classify(complex_grassmannian(n), EulerClassSpec(1, 0))
        assert verdict.formal is formal, n
        assert verdict.justification == "Thm4.4"
        if not formal:
            assert verdict.witness is not None
            assert not verdict.witness.trivial
            assert not is_trivial(verdict.witness)


def test_complex_zero_a_is_product():
    verdict = classify(complex_grassmannian(4), EulerClassSpec(0, 0))
    assert verdict.formal and verdict.justification == "ProductModel"


def test_real_even_table():
    # m = 3: odd, not 2 mod 3 -> non-formal only on the b = 0 axis
    for e, formal in ((EulerClassSpec(1, 0), False),
                      (EulerClassSpec(-2, 0), False),
                      (EulerClassSpec(1, 1), True),
                      (EulerClassSpec(0, 1), True)):
        verdict = classify(SpaceId("gr-r-even", 3), e)
        assert verdict.formal is formal, e
    # m = 5: odd and 2 mod 3 -> both conditions fire
    for e, formal in ((EulerClassSpec(1, 0), False),
                      (EulerClassSpec(2, -2), False),
                      (EulerClassSpec(1, 2), True)):
        verdict = classify(SpaceId("gr-r-even", 5), e)
        assert verdict.formal is formal, e
    # m = 4: even and not 2 mod 3 -> always formal
    for e in grid2(-2, 2):
        if e.is_zero:
            continue
        assert classify(SpaceId("gr-r-even", 4), e).formal


def test_real_even_witness_attached():
    verdict = classify(SpaceId("gr-r-even", 3), EulerClassSpec(1, 0))
    assert verdict.witness is not None and not verdict.witness.trivial
    assert verdict.justification == "Thm5.4"


def test_real_odd_always_formal():
    for n in (3, 5, 7, 11):
        for e in (EulerClassSpec(7, -3), EulerClassSpec(1, 1),
                  EulerClassSpec(0, 2)):
            verdict = classify(real_grassmannian(n), e)
            assert verdict.formal
            assert verdict.justification in ("Thm5.6", "ProductModel")


def test_r8_table():
    space = real_grassmannian(4)
    cases = (((1, 1, 0), False), ((1, 0, 1), False), ((1, 1, 1), True),
             ((1, 2, 0), True), ((0, 1, 1), True), ((1, 0, 0), True),
             ((-1, 1, 0), False), ((2, -2, 1), False), ((0, 0, 2), True))
    for coeffs, formal in cases:
        verdict = classify(space, EulerClassSpec(*coeffs))
        assert verdict.formal is formal, coeffs
        if not formal:
            assert verdict.witness is not None
            assert not verdict.witness.trivial


def test_exceptional_and_spheres():
    for space in EXCEPTIONAL:
        assert classify(space, EulerClassSpec(5)).justification == "Sec6"
        assert classify(space, EulerClassSpec(0)).justification == "ProductModel"
    assert classify(SpaceId("sphere", 3)).formal
    assert classify(SpaceId("rp", 7)).justification == "SphereRP"


def test_homogeneous_bundles_formal():
    spaces = [complex_grassmannian(n) for n in range(1, 9)] \
        + [real_grassmannian(n) for n in range(3, 13)] + list(EXCEPTIONAL)
    for space in spaces:
        assert classify(space, homogeneous_euler(space)).formal, space


def test_verdict_scaling_invariance():
    for space, e in ((complex_grassmannian(2), EulerClassSpec(1, 0)),
                     (SpaceId("gr-r-even", 5), EulerClassSpec(1, -1)),
                     (real_grassmannian(4), EulerClassSpec(1, 0, 1)),
                     (EVI, EulerClassSpec(2))):
        reference = classify(space, e)
        for factor in (3, -1, Fraction(-2, 5)):
            verdict = classify(space, e.scaled(factor))
            assert (verdict.formal, verdict.justification) == \
                (reference.formal, reference.justification)


def test_real_sign_flip_symmetry():
    for m in (3, 4, 5):
        space = SpaceId("gr-r-even", m)
        for e in grid2(-2, 2):
            if e.is_zero:
                continue
            flipped = EulerClassSpec(e.a, -e.b)
            assert classify(space, e).formal == classify(space, flipped).formal


def test_alpha_coefficients_values():
    assert alpha_coefficients(1, 1, 0) == (0, 1)
    assert alpha_coefficients(1, 1, 1) == (0, 0)
    assert alpha_coefficients(1, 0, 0) == (Fraction(1, 2), Fraction(1, 2))


def test_alpha_identity_holds_on_signed_grid():
    for a in range(-2, 3):
        for b in range(-2, 3):
            for c in range(-2, 3):
                alpha1, alpha2 = alpha_coefficients(a, b, c)
                assert alpha1 == Fraction(1, 2) * (a - b) * (a + c)
                assert alpha2 == Fraction(1, 2) * (a + b) * (a - c)


def test_r8_witness_side_matches_alphas():
    # alpha_1 = 0 picks <xi2, xi2, xi1>; alpha_2 = 0 picks <xi1, xi1, xi2>
    space = real_grassmannian(4)
    verdict = classify(space, EulerClassSpec(1, 1, 0))   # alpha = (0, 1)
    first = verdict.witness.inputs[0]
    # xi2 = -l - x + z has base coordinates (-1, -1, 1) over (l, x, z)
    assert first.base_part == (Fraction(-1), Fraction(-1), Fraction(1))
    verdict = classify(space, EulerClassSpec(1, 0, 1))   # alpha = (1, 0)
    first = verdict.witness.inputs[0]
    assert first.base_part == (Fraction(1), Fraction(-1), Fraction(1))


def test_r8_negative_coefficients_transport():
    space = real_grassmannian(4)
    verdict = classify(space, EulerClassSpec(-1, 1, 0))
    assert not verdict.formal
    assert not verdict.witness.trivial


def test_cross_check_real_even():
    report = cross_check(SpaceId("gr-r-even", 5), grid2(-2, 2))
    assert report.all_ok
    nonformal = [p for p in report.points if not p.formal]
    assert len(nonformal) == 12
    assert all(p.witness_defined and p.witness_trivial is False
               for p in nonformal)


def test_cross_check_complex_odd_has_no_witness_family():
    report = cross_check(complex_grassmannian(3),
                         [EulerClassSpec(a, 0) for a in range(-2, 3)])
    assert report.all_ok
    assert all(p.formal and not p.witness_defined for p in report.points)


def test_cross_check_fractional_coefficients():
    points = [EulerClassSpec(Fraction(1, 2), Fraction(-1, 2)),
              EulerClassSpec(Fraction(2, 3), 0),
              EulerClassSpec(Fraction(1, 3), Fraction(2, 3))]
    report = cross_check(SpaceId("gr-r-even", 5), points)
    assert report.all_ok
    assert [p.formal for p in report.points] == [False, False, True]
    points = [EulerClassSpec(Fraction(1, 3), Fraction(1, 3), Fraction(2, 3)),
              EulerClassSpec(Fraction(5, 7), Fraction(5, 7), Fraction(5, 7))]
    report = cross_check(real_grassmannian(4), points)
    assert report.all_ok
    assert [p.formal for p in report.points] == [False, True]


def test_cross_check_complex_even_witness():
    report = cross_check(complex_grassmannian(4), [EulerClassSpec(1, 0)])
    assert report.all_ok
    point = report.points[0]
    assert not point.formal and point.witness_trivial is False


def test_larger_parameters():
    # beyond the acceptance sizes: duality, formality, and witnesses hold
    from wolfform.model import betti, build_model
    for space in (complex_grassmannian(10), real_grassmannian(16),
                  real_grassmannian(17)):
        e = homogeneous_euler(space)
        numbers = betti(build_model(space, e))
        top = len(numbers) - 1
        assert all(numbers[k] == numbers[top - k] for k in range(top + 1))
        assert classify(space, e).formal
    verdict = classify(SpaceId("gr-r-even", 8), EulerClassSpec(3, -3))
    assert not verdict.formal and not verdict.witness.trivial
    verdict = classify(complex_grassmannian(8), EulerClassSpec(2, 0))
    assert not verdict.formal and not verdict.witness.trivial


def test_classify_requires_euler_for_wolf_spaces():
    with pytest.raises(ValueError):
        classify(GI)


def test_classify_rejects_bad_arity():
    with pytest.raises(ValueError):
        classify(complex_grassmannian(2), EulerClassSpec(1, 0, 5))
