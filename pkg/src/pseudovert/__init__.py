"""Ham-sandwich cuts and pseudo-vertical rank selection for abstract order types.

All algorithms reach the input only through a sidedness oracle
``ccw(a, b, c)``, so they run unchanged on point sets and on non-realizable
order types given as wiring diagrams.
"""

from .arrangement import ArrangementView, RotatedView, find_extreme_point, is_extreme, sweep_wiring
from .chirotope import (
    CountingOracle, DegenerateTriple, InvalidWiring, Orientation, PointSetOracle, TripleTable,
    WiringDiagram, orient, orient_realized, random_points, random_wiring, table_from_wiring,
)
from .epsapprox import (
    EpsApproximation, RangeSpace, build_eps_approx, enumerate_pseudo_segment_ranges,
    enumerate_semispace_ranges, verify_eps_approx,
)
from .hamsandwich import (
    BiChromatic, Cut, PruneBoundViolated, brute_force_cut, ham_sandwich_cut, parity_reduce,
    verify_cut,
)
from .pseudovertical import (
    MINUS_INF, PLUS_INF, GammaOrder, NotAbove, PseudoVertical, RankOutOfRange, Side,
    compare_pseudo_verticals, compute_L, gamma_traversal, rank_above, rank_of, select_rank,
)

__all__ = [
    "ArrangementView", "RotatedView", "find_extreme_point", "is_extreme", "sweep_wiring",
    "CountingOracle", "DegenerateTriple", "InvalidWiring", "Orientation", "PointSetOracle",
    "TripleTable", "WiringDiagram", "orient", "orient_realized", "random_points",
    "random_wiring", "table_from_wiring",
    "EpsApproximation", "RangeSpace", "build_eps_approx", "enumerate_pseudo_segment_ranges",
    "enumerate_semispace_ranges", "verify_eps_approx",
    "BiChromatic", "Cut", "PruneBoundViolated", "brute_force_cut", "ham_sandwich_cut",
    "parity_reduce", "verify_cut",
    "MINUS_INF", "PLUS_INF", "GammaOrder", "NotAbove", "PseudoVertical", "RankOutOfRange",
    "Side", "compare_pseudo_verticals", "compute_L", "gamma_traversal", "rank_above",
    "rank_of", "select_rank",
]
