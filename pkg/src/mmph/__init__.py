"""Exact analysis of MMP orthogonality hypergraphs.

Parsing and validation of the single-line ASCII set format, binary vs
non-binary decisions, classical and quantum hypergraph indices,
reflection-operator inequalities over Q(sqrt 2), coordinatization search,
loop analysis, and seeded generation of critical non-binary subsets.
"""

from .assignment import (
    BinaryVerdict,
    CriticalityVerdict,
    admissible_max,
    brute_force_admissible_max,
    brute_force_binary,
    brute_force_classical_index,
    classical_index,
    critical_reduce,
    decide_binary,
    decide_critical,
    has_parity_proof,
    is_admissible,
    is_satisfying,
    strip_degree_one,
    strip_vertices,
)
from .corpus import (
    CorpusEntry,
    corpus as corpus_entries,
    get as corpus_get,
    ids as corpus_ids,
)
from .encoding import (
    Diagnostic,
    ParseError,
    parse_coordinates,
    parse_mmph,
    serialize_coordinates,
    serialize_mmph,
)
from .field import QSqrt2, SQRT2, format_q2, parse_q2
from .generation import (
    DistributionRecord,
    distribution,
    distribution_csv,
    enumerate_criticals,
    explore_critical,
    isomorphic,
    signature,
)
from .geometry import (
    ComponentPool,
    CoordSearchResult,
    canonical_ray,
    cross,
    dot,
    fill,
    fill_coordinates,
    find_coordinatization,
    orthogonality_matrix,
    projectively_equal,
    verify_coordinatization,
)
from .hypergraph import (
    ALPHABET,
    Hypergraph,
    MmphError,
    PreconditionError,
    ValidationError,
    Violation,
    label_rank,
    rank_label,
    validate,
)
from .indices import IndexReport, calibration_plan, index_report
from .loops import (
    LoopSearchResult,
    largest_loop,
    loop_marking,
    shortest_loop,
    strip_loop_annotation,
)
from .operators import (
    Mat3,
    OperatorReport,
    aggregate_operator,
    classify_operator,
    max_classical,
    max_classical_from_pairs,
    operator_report,
    orthogonal_pairs,
    reflection_operator,
)
from .report import analyze, to_json

__version__ = "0.1.0"
