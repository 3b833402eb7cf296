"""Exact-arithmetic cohomology and formality of 3-sphere bundles.

The library builds rational models of SU(2)/SO(3)-bundles over the
built-in symmetric base spaces, computes their cohomology and triple
Massey products over Q, and classifies the total spaces as formal or
non-formal with machine-checked witnesses.
"""

from .classify import (CrossCheckPoint, CrossCheckReport, Verdict,
                       alpha_coefficients, classify, cross_check)
from .linalg import ExactMatrix, SpanReducer
from .massey import MasseyResult, is_trivial, solve_primitive, triple_massey
from .model import (BundleModel, ModelClass, ModelCohomology, betti,
                    build_model, class_from_polynomials, class_from_string,
                    class_product, model_cohomology, representative_string)
from .poly import (GradedPolynomial, Generator, ParseError, format_polynomial,
                   monomials_of_degree, parse_polynomial)
from .quotient import (DegreeBasis, RingPresentation, degree_basis,
                       multiplication_matrix, normal_form)
from .spaces import (EII, EIX, EVI, FI, GI, EulerClassSpec, SpaceId,
                     UnsupportedSpaceError, complex_grassmannian,
                     divides_linear_bruteforce, divides_linear_criterion,
                     format_euler, format_space, homogeneous_euler,
                     parse_euler, parse_space, presentation,
                     quaternionic_class, real_grassmannian, sigma,
                     sigma_closed, sigma_series_check)

__version__ = "0.1.0"
