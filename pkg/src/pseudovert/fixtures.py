"""Small named inputs used by the tests, the CLI and the docs."""

from __future__ import annotations

from .chirotope import PointSetOracle, TripleTable, WiringDiagram, table_from_wiring

# Three points whose dual lines are y = x, y = -x + 2, y = 3x - 6.
# Ids: a = 0, b = 1, c = 2.  Start order b, a, c.
TRI3_POINTS = [(1, 0), (-1, -2), (3, 6)]
TRI3_EXTREME = 1

SQUARE_CENTER_POINTS = [(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)]

# A simple arrangement of nine pseudo-lines that perturbs the non-Pappus
# configuration: eight of the nine Pappus triples are oriented as a
# perturbation of the collinear configuration would allow, the ninth is not.
# Produced by tools/derive_non_pappus.py; wire i is point wires[i] there, with
# wires = [0, 2, 1, 8, 7, 5, 4, 6, 3].
NON_PAPPUS_SWAPS = [
    1, 2, 3, 4, 5, 6, 7, 8, 4, 3, 2, 3, 4, 5, 6, 7, 6, 4,
    5, 1, 2, 3, 4, 5, 6, 7, 2, 3, 4, 5, 4, 1, 2, 3, 1, 2,
]


def tri3() -> PointSetOracle:
    return PointSetOracle(TRI3_POINTS)


def square_center() -> PointSetOracle:
    return PointSetOracle(SQUARE_CENTER_POINTS)


def non_pappus_wiring() -> WiringDiagram:
    w = WiringDiagram(9, list(NON_PAPPUS_SWAPS))
    w.validate()
    return w


def non_pappus() -> TripleTable:
    """The fixture as an oracle without coordinates."""
    return table_from_wiring(non_pappus_wiring())
