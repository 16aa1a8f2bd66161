"""Incompressible surfaces, Culler-Shalen seminorms and SL(2,C) Casson invariants of two-bridge knots."""
from .alexander import AlexanderData, admissible_alexander, alexander, is_fibered
from .apoly import AhatDegrees, ahat_degrees, double_twist_degM, torus_ahat_degrees
from .casson import (
    AdmissibilityReport,
    CassonResult,
    admissibility,
    casson_double_twist,
    casson_invariant,
    exceptional_slopes,
    lambda_prime,
    nontriviality,
    surgery_formula,
)
from .exact import DomainError, IntPoly, rat
from .knots import (
    DoubleTwistKnot,
    InvalidKnotError,
    Slope,
    SlopeParseError,
    TwoBridgeKnot,
    canonical,
    classify,
    from_double_twist,
    is_equivalent,
    mirror,
    normalize,
    parse_knot,
    parse_slope,
)
from .seminorm import SeminormTable, build_table, double_twist_seminorm, eval_seminorm, is_norm
from .surfaces import ContinuedFraction, SurfaceDatum, all_surfaces, enumerate_expansions, seifert_expansion

__version__ = "0.1.0"
