"""Markov numbers as lengths of lattice segments in a triangulated plane."""
from .lattice import (
    DegenerateSegmentError, Direction, LatticePoint, PerturbedRational, Side,
    base_crossing_sequence, deformed_crossing_sequence, fan_sequence,
    is_empty_convex_quadrilateral, is_empty_triangle, is_strictly_convex,
    peg_path_crossing_sequence, primitive_decomposition,
)
from .markov import (
    DEFAULT_CACHE, CacheValidationError, DistanceCache, DomainError, MarkovTriple,
    chebyshev_multiples, classical_value, m, markov_distance, markov_number,
    multiplicity_value, stern_brocot_oracle,
)
from .relations import (
    Cell, DomainFilter, PreconditionError, RatioReport, RegionMap, ScanReport, Verdict,
    check_additive_inequality, check_aigner, check_log_triangle, check_markov_equation,
    check_parallelogram, check_ptolemy_equality, check_ptolemy_inequality,
    check_shortest_path, classify_neighborhood, log_metric, ratio_fibonacci_limit,
    ratio_pell_bound, scan_line,
)
from .snake import (
    ContinuedFraction, Glue, InvalidSequenceError, SizeLimitError, SnakeGraph, Tile,
    build_snake_graph, continued_fraction_of, count_matchings_bruteforce,
    count_matchings_fast,
)
from .verify import VerifyOutcome, run_suite

__version__ = "0.1.0"
