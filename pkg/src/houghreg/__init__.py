"""Exact decision procedures for Hough regularity of parametrized families
of affine schemes, plus a small accumulator-voting detector."""

from .errors import (
    BindingError,
    DegenerateFamilyError,
    DetectorConfigError,
    DimensionError,
    HoughregError,
    LeadingTermError,
    NoVotesError,
    ParseError,
    RingMismatchError,
    SpecializationError,
)
from .orders import DEGLEX, DEGREVLEX, LEX, TermOrder, block_elim
from .poly import Poly, QQ, RationalField, Ring, compare_terms, exact_div, poly_divmod, ring
from .ratfun import FractionField, RatFun, lcm_denominators, poly_gcd, poly_lcm, ratfun
from .groebner import (
    GroebnerBasis,
    Ideal,
    basis_denominator,
    buchberger,
    groebner,
    ideal,
    is_member,
    normal_form,
    reduce_basis,
    s_polynomial,
    specialize_basis,
)
from .idealops import (
    eliminate,
    ideal_contains,
    ideal_equal,
    ideal_in_radical,
    in_radical,
    intersect,
    is_unit_ideal,
    quotient_by_ideal,
    quotient_by_poly,
    saturate_by_ideal,
    saturate_by_poly,
)
from .family import (
    EXIT_CODES,
    DoublingData,
    FamilySpec,
    GenericFiberBasis,
    RegularityReport,
    Verdict,
    check_sigma_regularity,
    doubling_data,
    family,
    fiber_ideal,
    generic_fiber_basis,
    generic_ideal,
    generic_regularity,
    hough_transform_point,
    open_set_text,
    render_report,
    report_to_dict,
)
from .detector import (
    Accumulator,
    Peak,
    accumulate_votes,
    accumulator,
    denominator_flags,
    detect_peak,
    incidence_mask,
    perturb_points,
    sample_fiber_points,
)
from .familyfile import (
    DetectorConfig,
    FamilyFile,
    load_points_csv,
    parse_family_file,
    render_family_file,
)
from .exprs import parse_expression

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
