"""Small Majorana fermion stabilizer codes over F2: constructions, distance checks and random-walk search."""

from .code import (
    LogicalBasis,
    MajoranaCode,
    Syndrome,
    ValidationReport,
    is_degenerate,
    logical_basis,
    min_stabilizer_weight,
    num_logical_qubits,
    single_mode_syndromes_distinct,
    syndrome,
    validate,
)
from .constructions import (
    QubitPauliOperator,
    extend_by_pair,
    hamming_majorana,
    map_qubit_code,
    strip_weight2_pairs,
)
from .distance import DistanceResult, brute_force_distance, passes_d4_check, passes_d6_check
from .f2core import (
    MajoranaOperator,
    ReplacementMask,
    anticommutes,
    apply_replacement,
    f2_rank,
    in_span,
    overlap_parity,
    weight,
)
from .search import CampaignReport, SearchOutcome, WalkParams, WalkState, init_walk, run_campaign, run_walk, walk_step
from .tables import best_from_nondegenerate, known_values, load_fixture, nd_upper_bound_d4, upper_bound_d4

__version__ = "0.1.0"
