"""Filter-commuting list functions: checkers, terms, coherence, reassembly."""

from .errors import (
    EmptyListError,
    FilterEqError,
    InvalidBlockError,
    InvalidExampleError,
    InvalidInclusionError,
    MissingSublistError,
    NotAnNfeError,
    OutOfScopeError,
    UniverseTooSmallError,
)
from .lists import (
    enumerate_list,
    filter_list,
    inflate,
    map_list,
    repeat_elem,
    reverse,
    sort_list,
    swap_blocks,
    swap_pairs,
    tail,
    triangle,
    unenumerate,
    unique_values,
)
from .equivariance import (
    EquivarianceReport,
    PropertyReport,
    Scope,
    Witness,
    check_filter_equivariant,
    check_map_equivariant,
    check_nfe_counts,
    check_no_new_values,
    check_tail_equivariant,
    report_from_json,
    witness_from_json,
)
from .nfe import (
    NfeTerm,
    OccurrenceFn,
    Z,
    blocks_to_nfe,
    check_multiset_profile,
    compute_occurrence,
    count_k_nfes,
    enumerate_k_nfes,
    inflation_factor,
    interpret_nfe,
    nfe_to_blocks,
)
from .functions import (
    AlphaStep,
    Builtin,
    Compose,
    FilterBy,
    FoldrAlpha,
    Inflate,
    ListFunction,
    MapBy,
    NfeFunction,
    PointwiseConcat,
    TableFunction,
    alpha_condition_check,
    apply,
    compose,
    foldr_fe,
    function_from_json,
    function_to_json,
    functions_equal_at_scope,
    pointwise_concat,
)
from .simplicial import (
    PermFamily,
    Permutation,
    check_cone,
    family_of_function,
    restrict_perm,
    restrict_perm_k,
)
from .amalgamation import (
    AmalgamationOutcome,
    Collection,
    amal,
    decompose_pi,
    decompose_pi_pairs,
    delta_step,
    extrapolate_fe,
    extrapolate_nfe_from_doubleton,
    is_amalgamable_step,
    square_multiplicity,
    two_unique_sublists,
)

__version__ = "0.1.0"
