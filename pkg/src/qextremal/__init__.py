"""Maximally mixed reductions of n-qubit pure states.

Two independent backends decide whether a reduction is maximally mixed:
exact GF(2) cut rank for graph states, and dense statevector partial
traces for arbitrary states.  On top of them sit exact purity averages,
closed-form bounds, structural freeness checks on the family of
maximally mixed subsets, and a seeded random search.
"""

from ._kernels import USING_COMPILED, kernel_name
from .bounds import (
    BoundsRow,
    bounds_row,
    covering_lower_bound,
    limit_constant,
    random_lower_bound,
    table_of_bounds,
    tk_closed_form,
    upper_bound_4m,
    upper_bound_even,
    upper_bound_odd,
)
from .errors import (
    BackendMismatchError,
    ParseError,
    QexError,
    ResourceLimitError,
    UnknownStateError,
    ValidationError,
)
from .f2linalg import F2Matrix, rank, submatrix, transpose
from .freeness import (
    FreenessVerdict,
    check_complete_free,
    check_hk_free,
    complement_symmetry,
)
from .graphs import (
    Graph,
    graph_from_edges,
    make_circulant,
    make_random_graph,
    make_turan_pair_graph,
    named_graph,
    parse_edge_list,
    serialize_edge_list,
)
from .marginal import (
    MarginalReport,
    analyze_graph_marginals,
    count_mm_reductions,
    cut_rank,
    is_maximally_mixed_rank,
    linear_entropy,
    marginal_purity_rank,
    potential_me,
    uniformity_order,
    uniformity_threshold,
)
from .search import SearchResult, hill_climb, random_search
from .statevec import (
    DensityMatrix,
    PauliTerm,
    PureState,
    analyze_state_marginals,
    anticommutator,
    bloch_coefficient,
    count_mm_reductions_sv,
    graph_state_vector,
    is_maximally_mixed_sv,
    named_state,
    parse_amplitude_file,
    pauli_product,
    purity,
    reduced_density,
    serialize_amplitude_file,
    subset_purity,
    uniformity_order_sv,
    weight_sector_norm,
)

__version__ = "0.1.0"
