"""Fixed points of monotone correspondences on finite posets.

Finite posets and correspondences, checkers for the monotonicity
conditions, certified fixed-point construction, and an exact model of a
two-branch infinite poset on which the supremum of a maximal chain escapes
a maximal convex family member.
"""

from .correspondence import (
    ConditionIIIViolation,
    ConditionIViolation,
    ConditionWitness,
    Correspondence,
    check_condition_I,
    check_condition_III,
    expansive_set,
    find_seed,
    fixed_points,
    isotone_selections,
)
from .fixpoint import (
    AscentPolicy,
    ProofTrace,
    check_finite_no_gap,
    construct_union_S,
    corrected_proof_trace,
    enumerate_original_S,
    smithson_ascent,
)
from .generate import (
    GenConfig,
    random_condition_I_correspondence,
    random_isotone_map,
    random_poset,
    random_seeded_instance,
)
from .instance import InstanceSpec, to_dot
from .poset import ElementSet, FinitePoset

__version__ = "0.1.0"

__all__ = [
    "AscentPolicy",
    "ConditionIIIViolation",
    "ConditionIViolation",
    "ConditionWitness",
    "Correspondence",
    "ElementSet",
    "FinitePoset",
    "GenConfig",
    "InstanceSpec",
    "ProofTrace",
    "check_condition_I",
    "check_condition_III",
    "check_finite_no_gap",
    "construct_union_S",
    "corrected_proof_trace",
    "enumerate_original_S",
    "expansive_set",
    "find_seed",
    "fixed_points",
    "isotone_selections",
    "random_condition_I_correspondence",
    "random_isotone_map",
    "random_poset",
    "random_seeded_instance",
    "smithson_ascent",
    "to_dot",
]
