"""Range spaces on the lines of an arrangement and their epsilon-approximations.

Two kinds of range are supported.  A *semispace* is the set of lines above a
crossing together with its upper line, or the set below it together with its
lower line.  A *pseudo-segment* range is the set of lines separating two
positions of the arrangement.

Ranges are handled as bitmasks over the ground set ``X``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arrangement import ArrangementView

EPS_FLOOR = 1 / 64
MAX_ATTEMPTS = 64
SAMPLED_CROSSINGS = 256


def sample_size(eps: float) -> int:
    """Size cap ``ceil(48 eps^-2 ln(1/eps))``."""
    return math.ceil(48 / eps**2 * math.log(1 / eps))


@dataclass
class RangeSpace:
    view: ArrangementView
    X: list[int]
    kind: str = "semispace"

    def __post_init__(self):
        if self.kind not in ("semispace", "pseudo_segment"):
            raise ValueError("unknown range kind %r" % self.kind)
        self.X = list(self.X)
        self.bit = {x: 1 << i for i, x in enumerate(self.X)}


@dataclass(frozen=True)
class EpsApproximation:
    members: tuple[int, ...]
    eps: float


def _above_mask(rs: RangeSpace, c) -> int:
    """Mask of lines of ``X`` strictly above crossing ``c``."""
    view = rs.view
    p, q = view.crossing(*c)
    m = 0
    for x, b in rs.bit.items():
        if x != p and x != q and not view.below_sorted(x, p, q):
            m |= b
    return m


def _mask_to_set(rs, m):
    return frozenset(x for x, b in rs.bit.items() if m & b)


def _semispace_masks(rs: RangeSpace, Y: Sequence[int]) -> set[int]:
    view = rs.view
    bit = rs.bit
    out = set()
    for f, g in itertools.combinations(Y, 2):
        if not view.precedes(f, g):
            f, g = g, f
        above = bit[f]
        below = bit[g]
        for y in Y:
            if y == f or y == g:
                continue
            if view.below_sorted(y, f, g):
                below |= bit[y]
            else:
                above |= bit[y]
        out.add(above)
        out.add(below)
    return out


def enumerate_semispace_ranges(rs: RangeSpace, Y: Iterable[int] | None = None) -> list[frozenset]:
    """Semispaces induced on ``Y`` (default ``X``): two per pair, deduplicated.

    O(|Y|^3) oracle calls.
    """
    if rs.kind != "semispace":
        raise ValueError("range space is not of semispace kind")
    Y = rs.X if Y is None else list(Y)
    return sorted((_mask_to_set(rs, m) for m in _semispace_masks(rs, Y)),
                  key=lambda s: (len(s), sorted(s)))


def _through(rs, c):
    return rs.bit.get(c[0], 0) | rs.bit.get(c[1], 0)


def _segment_masks(rs: RangeSpace, positions) -> list[int]:
    tops = [(_above_mask(rs, c), _through(rs, c)) for c in positions]
    out = []
    for (m1, t1), (m2, t2) in itertools.combinations(tops, 2):
        out.append((m1 ^ m2) & ~(t1 | t2))
    return out


def enumerate_pseudo_segment_ranges(rs: RangeSpace, positions) -> list[frozenset]:
    """Lines separating each pair of positions (crossings).

    Lines through either endpoint are left out, as if both endpoints were
    nudged into a neighbouring cell.
    """
    return [_mask_to_set(rs, m) for m in _segment_masks(rs, list(positions))]


def default_positions(rs: RangeSpace, A: Iterable[int] = (), seed: int = 0):
    """Crossings used to check pseudo-segment ranges.

    Every crossing of ``X`` for ``|X| <= 24``; beyond that, all crossings of
    ``A`` plus a fixed-seed sample of crossings of ``X``.
    """
    X = rs.X
    if len(X) <= 24:
        return list(itertools.combinations(X, 2))
    pos = list(itertools.combinations(sorted(A), 2))
    rng = random.Random(seed)
    for _ in range(SAMPLED_CROSSINGS):
        u, v = rng.sample(X, 2)
        pos.append((u, v))
    return pos


def _max_error(masks, amask, na, nx):
    worst = 0.0
    for m in masks:
        in_x = m.bit_count()
        in_a = (m & amask).bit_count()
        err = abs(in_a / na - in_x / nx) if na else (1.0 if in_x else 0.0)
        if err > worst:
            worst = err
    return worst


def _masks(rs, A, positions):
    if rs.kind == "semispace":
        return _semispace_masks(rs, rs.X)
    if positions is None:
        positions = default_positions(rs, A)
    return _segment_masks(rs, positions)


def approximation_error(rs: RangeSpace, A: Iterable[int], positions=None) -> float:
    """Largest deviation of ``A``'s relative count from ``X``'s over all ranges."""
    A = list(A)
    amask = 0
    for a in A:
        amask |= rs.bit[a]
    return _max_error(_masks(rs, A, positions), amask, len(A), len(rs.X))


def verify_eps_approx(rs: RangeSpace, approx: EpsApproximation, positions=None) -> bool:
    """Check the approximation inequality over every enumerated range."""
    return approximation_error(rs, approx.members, positions) <= approx.eps


def build_eps_approx(rs: RangeSpace, eps: float, seed: int | None = 0,
                     positions=None, size: int | None = None) -> EpsApproximation:
    """A verified ``eps``-approximation of ``rs`` by sampling.

    Samples ``min(|X|, size)`` elements (``size`` defaults to the
    :func:`sample_size` cap) until the verifier accepts; after
    ``MAX_ATTEMPTS`` rejections the whole ground set is returned, which is
    always valid.
    """
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    if eps < EPS_FLOOR:
        raise ValueError("eps below the supported floor 1/64")
    X = rs.X
    s = sample_size(eps) if size is None else size
    if s >= len(X):
        return EpsApproximation(tuple(X), eps)
    rng = random.Random(seed)
    masks = None
    for _ in range(MAX_ATTEMPTS):
        A = rng.sample(X, s)
        if masks is None or (rs.kind == "pseudo_segment" and positions is None and len(X) > 24):
            masks = _masks(rs, A, positions)
        amask = 0
        for a in A:
            amask |= rs.bit[a]
        if _max_error(masks, amask, len(A), len(X)) <= eps:
            return EpsApproximation(tuple(A), eps)
    return EpsApproximation(tuple(X), eps)


def shattered_subsets(ranges: Iterable[frozenset], ground: Sequence[int], size: int) -> list[tuple]:
    """Subsets of ``ground`` of the given size that ``ranges`` shatter."""
    ranges = list(ranges)
    out = []
    for sub in itertools.combinations(ground, size):
        s = frozenset(sub)
        traces = {r & s for r in ranges}
        if len(traces) == 2**size:
            out.append(sub)
    return out
