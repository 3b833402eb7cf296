"""The reproduction suite: one check per headline claim, exact arithmetic.

Each criterion recomputes its claim from scratch through the public API
and fails loudly on any mismatch.  `run_all` powers both the test suite
and the `verify-paper` CLI subcommand.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .classify import alpha_coefficients, classify, cross_check
from .massey import is_trivial
from .model import betti, build_model, model_cohomology, representative_string
from .quotient import degree_basis
from .spaces import (EII, EIX, EVI, FI, GI, EulerClassSpec, SpaceId,
                     complex_grassmannian, divides_linear_bruteforce,
                     divides_linear_criterion, format_space, homogeneous_euler,
                     presentation, real_grassmannian, sigma, sigma_closed,
                     sigma_series_check)

__all__ = ["CriterionResult", "run_all"]


@dataclass(frozen=True)
class CriterionResult:
    key: str
    name: str
    reference: str
    passed: bool
    detail: str
    seconds: float


EXCEPTIONAL_SPACES = (GI, FI, EII, EVI, EIX)

HOMOGENEOUS_SPACES = tuple(
    [complex_grassmannian(n) for n in range(1, 9)]
    + [real_grassmannian(n) for n in range(3, 13)]
    + list(EXCEPTIONAL_SPACES))

# per-degree listings of the bundle models du = x over the exceptional bases
EXCEPTIONAL_LISTINGS = (
    (GI, 11, frozenset({0, 11})),
    (FI, 31, frozenset({0, 8, 23, 31})),
    (EII, 21, frozenset({0, 6, 8, 12, 14, 20})),
    (EVI, 33, frozenset({0, 8, 12, 16, 20, 24, 32})),
    (EIX, 58, frozenset({0, 12, 20, 24, 32, 36, 44, 56})),
)


def _grid2(lo: int, hi: int):
    return [EulerClassSpec(a, b)
            for a in range(lo, hi + 1) for b in range(lo, hi + 1)]


def check_sigma_identities() -> str:
    for r in range(31):
        for variant in ("complex", "real"):
            if sigma(r, variant) != sigma_closed(r, variant):
                raise AssertionError(f"sigma mismatch at r={r}, {variant}")
    if not sigma_series_check(12):
        raise AssertionError("generating-function check failed at order 12")
    return "recursion = closed form for r <= 30, both variants; series to order 12"


def check_divisor_criterion() -> str:
    count = 0
    for a in range(-3, 4):
        for b in range(-3, 4):
            if (a, b) == (0, 0):
                continue
            for r in range(21):
                if divides_linear_bruteforce(a, b, r) != divides_linear_criterion(a, b, r):
                    raise AssertionError(f"divisor mismatch at (a,b,r)=({a},{b},{r})")
                count += 1
    return f"substitution oracle = closed criterion on {count} inputs"


def check_homogeneous_formality() -> str:
    for space in HOMOGENEOUS_SPACES:
        verdict = classify(space, homogeneous_euler(space))
        if not verdict.formal:
            raise AssertionError(f"{format_space(space)} not formal "
                                 "with the homogeneous Euler class")
    return f"{len(HOMOGENEOUS_SPACES)} homogeneous bundles all formal"


def check_complex_square_bundles() -> str:
    details = []
    for n in (2, 4, 6):
        verdict = classify(complex_grassmannian(n), EulerClassSpec(1, 0))
        w = verdict.witness
        if verdict.formal or w is None:
            raise AssertionError(f"gr-c n={n}, a=1, b=0 should be non-formal")
        if w.trivial or is_trivial(w):
            raise AssertionError(f"gr-c n={n} witness is trivial")
        details.append(f"n={n} indet dim {w.indeterminacy_dim}")
    for n in (1, 3, 5):
        verdict = classify(complex_grassmannian(n), EulerClassSpec(1, 0))
        if not verdict.formal:
            raise AssertionError(f"gr-c n={n}, a=1, b=0 should be formal")
    return "non-formal witnesses at n=2,4,6 (" + ", ".join(details) + \
        "); formal at n=1,3,5"


def check_real_even_grid() -> str:
    grid = _grid2(-2, 2)
    nonformal_total = 0
    for m in (3, 4, 5, 7):
        space = SpaceId("gr-r-even", m)
        for e in grid:
            expect_nonformal = ((m % 2 == 1 and e.b == 0 and e.a != 0)
                                or (m % 3 == 2 and abs(e.a) == abs(e.b) != 0))
            verdict = classify(space, e)
            if verdict.formal == expect_nonformal:
                raise AssertionError(
                    f"m={m}, a={e.a}, b={e.b}: verdict does not match the table")
        report = cross_check(space, grid)
        if not report.all_ok:
            bad = report.failures[0]
            raise AssertionError(f"cross-check failure at m={m}, {bad.euler}")
        nonformal_total += sum(1 for p in report.points if not p.formal)
    return f"m in (3,4,5,7) x 25 points; {nonformal_total} non-formal, " \
           "all witnesses non-trivial"


def check_r8_grid() -> str:
    space = real_grassmannian(4)
    grid = [EulerClassSpec(a, b, c)
            for a in range(3) for b in range(3) for c in range(3)]
    for e in grid:
        a, b, c = e.a, e.b, e.c
        expect_nonformal = ((abs(a) == abs(b) != 0 and abs(c) != abs(a))
                            or (abs(a) == abs(c) != 0 and abs(b) != abs(a)))
        verdict = classify(space, e)
        if verdict.formal == expect_nonformal:
            raise AssertionError(
                f"a={a}, b={b}, c={c}: verdict does not match the table")
        alpha1, alpha2 = alpha_coefficients(a, b, c)  # verifies the identity
        if alpha1 != Fraction(1, 2) * (a - b) * (a + c) or \
                alpha2 != Fraction(1, 2) * (a + b) * (a - c):
            raise AssertionError(f"alpha mismatch at ({a},{b},{c})")
    report = cross_check(space, grid)
    if not report.all_ok:
        raise AssertionError(f"cross-check failure: {report.failures[0]}")
    nonformal = sum(1 for p in report.points if not p.formal)
    return f"27 grid points, {nonformal} non-formal; square-class identity " \
           "verified in the quotient ring at every point"


def check_exceptional_listings() -> str:
    for space, bound, expected in EXCEPTIONAL_LISTINGS:
        model = build_model(space, EulerClassSpec(1))
        numbers = betti(model)
        nonzero = {k for k in range(bound + 1) if numbers[k]}
        if nonzero != set(expected):
            raise AssertionError(
                f"{format_space(space)}: nonzero degrees {sorted(nonzero)} "
                f"!= expected {sorted(expected)}")
        if any(numbers[k] != 1 for k in nonzero):
            raise AssertionError(f"{format_space(space)}: dimension above one")
    gi_model = build_model(GI, EulerClassSpec(1))
    top = model_cohomology(gi_model, 11)
    reps = [representative_string(gi_model, r) for r in top.representatives]
    if reps != ["x^2*u"]:
        raise AssertionError(f"gi degree-11 representative is {reps}")
    fi_model = build_model(FI, EulerClassSpec(1))
    reps = [representative_string(fi_model, r)
            for r in model_cohomology(fi_model, 8).representatives]
    if reps != ["y"]:
        raise AssertionError(f"fi degree-8 representative is {reps}")
    return "per-degree groups match for all five exceptional bundles; " \
           "gi top witness is x^2*u"


def _structural_models():
    pairs = [(s, homogeneous_euler(s)) for s in HOMOGENEOUS_SPACES]
    pairs += [(s, EulerClassSpec(1)) for s in EXCEPTIONAL_SPACES]
    pairs += [(complex_grassmannian(n), EulerClassSpec(1, 0)) for n in (2, 4, 6)]
    for m in (3, 4, 5, 7):
        pairs += [(SpaceId("gr-r-even", m), EulerClassSpec(a, b))
                  for a, b in ((1, 0), (1, 1), (2, -2), (0, 1))]
    pairs += [(real_grassmannian(4), EulerClassSpec(a, b, c))
              for a, b, c in ((1, 1, 0), (1, 0, 1), (1, 2, 2), (2, 1, 0))]
    return pairs


def check_structural_suite() -> str:
    # Poincare duality for every model the other criteria exercise
    models = 0
    for space, euler in _structural_models():
        model = build_model(space, euler)
        numbers = betti(model)
        top = model.formal_dimension
        for k in range(top + 1):
            if numbers[k] != numbers[top - k]:
                raise AssertionError(
                    f"duality fails for {format_space(space)}, {euler}: "
                    f"b_{k}={numbers[k]} vs b_{top - k}={numbers[top - k]}")
        models += 1

    # scaling invariance of Betti numbers and verdicts
    samples = [(complex_grassmannian(2), EulerClassSpec(1, 0)),
               (SpaceId("gr-r-even", 3), EulerClassSpec(1, 0)),
               (real_grassmannian(4), EulerClassSpec(1, 1, 0)),
               (FI, EulerClassSpec(1))]
    for space, euler in samples:
        reference = betti(build_model(space, euler))
        base_verdict = classify(space, euler)
        for factor in (2, -3, Fraction(1, 5)):
            scaled = euler.scaled(factor)
            if betti(build_model(space, scaled)) != reference:
                raise AssertionError(
                    f"Betti numbers change under scaling for {format_space(space)}")
            verdict = classify(space, scaled)
            if (verdict.formal, verdict.justification) != \
                    (base_verdict.formal, base_verdict.justification):
                raise AssertionError(
                    f"verdict changes under scaling for {format_space(space)}")

    # zero Euler class: Betti numbers are base plus base shifted by three
    for space in (complex_grassmannian(3), real_grassmannian(4), GI, EII):
        ring = presentation(space)
        base_numbers = [degree_basis(ring, k).dim
                        for k in range(ring.formal_dimension + 1)]
        model = build_model(space, EulerClassSpec(0))
        expected = [
            (base_numbers[k] if k <= ring.formal_dimension else 0)
            + (base_numbers[k - 3] if 0 <= k - 3 <= ring.formal_dimension else 0)
            for k in range(model.formal_dimension + 1)]
        if list(betti(model)) != expected:
            raise AssertionError(
                f"product-model Betti numbers wrong for {format_space(space)}")

    # base rings have no odd-degree cohomology
    for space in HOMOGENEOUS_SPACES:
        ring = presentation(space)
        for k in range(1, ring.formal_dimension + 1, 2):
            if degree_basis(ring, k).dim:
                raise AssertionError(
                    f"odd-degree class in the {format_space(space)} base ring")
    return f"duality on {models} models; scaling, zero-Euler and " \
           "odd-vanishing checks passed"


CRITERIA = (
    ("1", "sigma-identities", "Lem4.1", check_sigma_identities, 1.0),
    ("2", "divisor-criterion", "Lem5.3", check_divisor_criterion, 1.0),
    ("3", "homogeneous-formality", "Thm4.3-5.6+Sec6", check_homogeneous_formality, 30.0),
    ("4", "complex-square-bundles", "Thm4.4", check_complex_square_bundles, None),
    ("5", "real-even-grid", "Thm5.4", check_real_even_grid, 60.0),
    ("6", "r8-grid", "Thm5.5", check_r8_grid, None),
    ("7", "exceptional-listings", "Sec6", check_exceptional_listings, None),
    ("8", "structural-suite", "global", check_structural_suite, None),
)

TOTAL_BUDGET_SECONDS = 180.0


def run_criterion(key: str) -> CriterionResult:
    for ckey, name, reference, func, budget in CRITERIA:
        if ckey != key:
            continue
        start = time.perf_counter()
        try:
            detail = func()
            passed = True
        except AssertionError as exc:
            detail = str(exc)
            passed = False
        elapsed = time.perf_counter() - start
        if passed and budget is not None and elapsed > budget:
            passed = False
            detail = f"exceeded the {budget:.0f}s budget ({elapsed:.1f}s)"
        return CriterionResult(key, name, reference, passed, detail, elapsed)
    raise ValueError(f"unknown criterion {key!r}")


def run_all() -> list[CriterionResult]:
    results = [run_criterion(key) for key, *_ in CRITERIA]
    total = sum(r.seconds for r in results)
    passed = total <= TOTAL_BUDGET_SECONDS
    results.append(CriterionResult(
        "time", "total-runtime", "global", passed,
        f"suite completed within the {TOTAL_BUDGET_SECONDS:.0f}s budget"
        if passed else f"suite took too long ({total:.1f}s)",
        total))
    return results
