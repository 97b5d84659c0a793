"""Exact-arithmetic toolkit for the Intersection and Composition properties
of conditional independence in discrete random variables."""

from .distributions import (
    JointDistribution,
    VariableSchema,
    independent_join,
    mixture,
)
from .information import (
    EntropyProfile,
    InfoDiagram3,
    TOLERANCE,
    cond_mutual_info,
    entropy_profile,
    info_diagram3,
    interaction_information,
    matus_inequality_check,
    mutual_info,
)
from .structures import (
    CIStatement,
    CIStructure,
    canonical_orbit_form,
    closure,
    expand_global,
    full_structure,
    holds_global,
    meet_irreducibles,
    orbit_count,
    satisfies_axiom,
)
from .polymatroids import (
    Polymatroid,
    free_matroid,
    from_rank_table,
    from_subspace_generators,
    polymatroid_ci,
    uniform_matroid,
)
from .criteria import (
    BipartiteSupportGraph,
    CriterionReport,
    conditional_ingleton_check,
    double_markov_check,
    dual_conditional_ingleton_check,
    evaluate_all,
    gk_criterion,
    gk_extend,
    interaction_criterion,
    krv_support_check,
    mtp2_check,
    support_graph,
    third_implication_check,
)
from .families import (
    KirkupParams,
    common_cause_extension,
    group_sum_family,
    intersection_violator,
    kirkup_family,
    non_gk_example,
    random_rational_distribution,
    tight_violation_family,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
