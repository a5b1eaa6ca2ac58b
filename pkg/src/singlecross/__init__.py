"""Recognise approval profiles that extend to single-crossing rankings."""

from singlecross.errors import InternalInvariantError, StructureViolationError
from singlecross.extend import (
    SSCViolation,
    extend_to_single_crossing,
    extends,
    find_ssc_violation,
    is_sc,
    is_ssc,
)
from singlecross.nb import (
    Axis,
    NBInstance,
    brute_force_solve,
    extract_nb_constraints,
    order_satisfies,
    parse_nb_instance,
)
from singlecross.orient import fpt_solve, min_rule_orientation, solve_nb_fpt
from singlecross.pipeline import Accept, Reject, brute_force_psc, recognize_psc
from singlecross.profile import (
    ApprovalProfile,
    LinearProfile,
    ProfileFormatError,
    WeakOrderProfile,
    generate_cycle_profile,
    generate_sc_positive,
    parse_approval_matrix,
    subprofile,
)

__all__ = [
    "Accept",
    "ApprovalProfile",
    "Axis",
    "InternalInvariantError",
    "LinearProfile",
    "NBInstance",
    "ProfileFormatError",
    "Reject",
    "SSCViolation",
    "StructureViolationError",
    "WeakOrderProfile",
    "brute_force_psc",
    "brute_force_solve",
    "extend_to_single_crossing",
    "extends",
    "extract_nb_constraints",
    "find_ssc_violation",
    "fpt_solve",
    "generate_cycle_profile",
    "generate_sc_positive",
    "is_sc",
    "is_ssc",
    "min_rule_orientation",
    "order_satisfies",
    "parse_approval_matrix",
    "parse_nb_instance",
    "recognize_psc",
    "solve_nb_fpt",
    "subprofile",
]
