"""Triple-orientation oracles and the inputs they are built from.

Every algorithm in this package talks to a point set only through
``oracle.ccw(a, b, c)``.  Three oracles are provided:

* :class:`PointSetOracle` -- exact integer determinants on a realized set,
* :class:`TripleTable` -- an abstract order type, one stored sign per 3-subset,
* :class:`CountingOracle` -- wraps another oracle and counts calls.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass, field
from math import comb
from typing import Protocol, Sequence

COORD_BOUND = 2**30


class DegenerateTriple(ValueError):
    """Three points are collinear."""

    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__("collinear triple %d %d %d" % self.triple)


class InvalidWiring(ValueError):
    pass


class Orientation(enum.IntEnum):
    CW = -1
    CCW = 1


class TripleOracle(Protocol):
    n: int

    def ccw(self, a: int, b: int, c: int) -> bool: ...


def orient(oracle: TripleOracle, a: int, b: int, c: int) -> Orientation:
    return Orientation.CCW if oracle.ccw(a, b, c) else Orientation.CW


def _det(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orient_realized(points, a, b, c) -> Orientation:
    """Sign of the homogeneous determinant of points ``a, b, c``.

    >>> orient_realized([(0, 0), (1, 0), (0, 1)], 0, 1, 2)
    <Orientation.CCW: 1>
    """
    if len({a, b, c}) != 3:
        raise ValueError("triple must consist of distinct points")
    d = _det(points[a], points[b], points[c])
    if d == 0:
        raise DegenerateTriple((a, b, c))
    return Orientation.CCW if d > 0 else Orientation.CW


def validate_general_position(points) -> list[tuple[int, int, int]]:
    """Return every collinear triple (empty list means general position)."""
    bad = []
    for a, b, c in itertools.combinations(range(len(points)), 3):
        if _det(points[a], points[b], points[c]) == 0:
            bad.append((a, b, c))
    return bad


def find_collinear_triple(points) -> tuple[int, int, int] | None:
    """Some collinear triple, or None.  O(n^2) via reduced directions."""
    n = len(points)
    for a in range(n):
        xa, ya = points[a]
        seen = {}
        for b in range(a + 1, n):
            dx, dy = points[b][0] - xa, points[b][1] - ya
            g = math.gcd(dx, dy)
            dx, dy = dx // g, dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            if (dx, dy) in seen:
                return (a, seen[(dx, dy)], b)
            seen[(dx, dy)] = b
    return None


class PointSetOracle:
    """Orientation oracle backed by integer coordinates.

    Coordinates are bounded by ``COORD_BOUND`` in absolute value; duplicate
    points are rejected.  Collinearity is detected lazily: a query that hits a
    collinear triple raises :class:`DegenerateTriple`.
    """

    def __init__(self, points: Sequence[tuple[int, int]]):
        pts = []
        for x, y in points:
            if not (isinstance(x, int) and isinstance(y, int)):
                raise TypeError("coordinates must be integers")
            if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
                raise ValueError("coordinate out of range: (%d, %d)" % (x, y))
            pts.append((x, y))
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        self.points = pts
        self.xs = [p[0] for p in pts]
        self.ys = [p[1] for p in pts]
        self.n = len(pts)

    def ccw(self, a, b, c):
        xs, ys = self.xs, self.ys
        xa, ya = xs[a], ys[a]
        d = (xs[b] - xa) * (ys[c] - ya) - (ys[b] - ya) * (xs[c] - xa)
        if d == 0:
            raise DegenerateTriple((a, b, c))
        return d > 0


class TripleTable:
    """Abstract order type stored as one sign per sorted triple.

    Deliberately has no coordinate accessor: code exercised against it can only
    use sidedness queries.
    """

    def __init__(self, n: int, signs: bytearray):
        if len(signs) != comb(n, 3):
            raise ValueError("expected %d signs, got %d" % (comb(n, 3), len(signs)))
        self.n = n
        self._signs = signs
        self._c2 = [comb(i, 2) for i in range(n)]
        self._c3 = [comb(i, 3) for i in range(n)]

    def _index(self, i, j, k):
        return self._c3[k] + self._c2[j] + i

    def ccw(self, a, b, c):
        # sort (a, b, c) tracking permutation parity
        flip = False
        if a > b:
            a, b = b, a
            flip = not flip
        if b > c:
            b, c = c, b
            flip = not flip
            if a > b:
                a, b = b, a
                flip = not flip
        if a == b or b == c:
            raise ValueError("triple must consist of distinct points")
        s = self._signs[self._c3[c] + self._c2[b] + a]
        return bool(s) != flip

    @classmethod
    def from_oracle(cls, oracle: TripleOracle) -> "TripleTable":
        n = oracle.n
        signs = bytearray(comb(n, 3))
        idx = 0
        # combinadic order: k outermost, then j, then i
        for k in range(n):
            for j in range(k):
                for i in range(j):
                    signs[idx] = oracle.ccw(i, j, k)
                    idx += 1
        return cls(n, signs)


class CountingOracle:
    """Counts ``ccw`` calls made through it.  One consumer per instance."""

    def __init__(self, inner: TripleOracle):
        self.inner = inner
        self.n = inner.n
        self.count = 0

    def ccw(self, a, b, c):
        self.count += 1
        return self.inner.ccw(a, b, c)

    def reset(self):
        self.count = 0


@dataclass
class WiringDiagram:
    """Wires ``0..n-1`` start top to bottom; ``swaps`` holds 1-based slots."""

    n: int
    swaps: list[int] = field(default_factory=list)

    def validate(self) -> None:
        n = self.n
        if n < 1:
            raise InvalidWiring("need at least one wire")
        if len(self.swaps) != n * (n - 1) // 2:
            raise InvalidWiring("expected %d swaps, got %d" % (n * (n - 1) // 2, len(self.swaps)))
        for _ in self.crossings():
            pass

    def crossings(self):
        """Yield ``(step, slot, upper, lower, permutation_before)`` per swap.

        ``upper`` starts above ``lower``; the permutation list is shared and
        must not be mutated by the caller.
        """
        perm = list(range(self.n))
        for step, s in enumerate(self.swaps):
            if not 1 <= s <= self.n - 1:
                raise InvalidWiring("slot %r out of range at step %d" % (s, step))
            u, v = perm[s - 1], perm[s]
            if u > v:
                raise InvalidWiring("wires %d and %d swap twice (step %d)" % (v, u, step))
            yield step, s, u, v, perm
            perm[s - 1], perm[s] = v, u
        if perm != list(range(self.n - 1, -1, -1)):
            raise InvalidWiring("swaps do not reverse the wires")


def table_from_wiring(w: WiringDiagram) -> TripleTable:
    """Chirotope of a wiring diagram.

    For wires ``p`` above ``q`` at the left edge, ``ccw(p, q, r)`` holds iff
    ``r`` is below the crossing of ``p`` and ``q``.
    """
    w.validate()
    n = w.n
    signs = bytearray(comb(n, 3))
    c2 = [comb(i, 2) for i in range(n)]
    c3 = [comb(i, 3) for i in range(n)]
    for _, s, p, q, perm in w.crossings():
        # p < q; slot index of p is s-1
        for pos, r in enumerate(perm):
            if r == p or r == q:
                continue
            below = pos > s
            # ccw(p, q, r) = below; store for the sorted triple
            a, b, c = p, q, r
            flip = False
            if b > c:
                b, c = c, b
                flip = not flip
                if a > b:
                    a, b = b, a
                    flip = not flip
            signs[c3[c] + c2[b] + a] = below != flip
    return TripleTable(n, signs)


def random_wiring(n: int, seed: int) -> WiringDiagram:
    """Random maximal chain of adjacent transpositions, reproducible by seed."""
    if n < 2:
        raise ValueError("need n >= 2")
    rng = random.Random(seed)
    perm = list(range(n))
    ready = [i for i in range(n - 1)]  # 0-based slots whose pair is uncrossed
    swaps = []
    while ready:
        s = rng.choice(ready)
        perm[s], perm[s + 1] = perm[s + 1], perm[s]
        swaps.append(s + 1)
        ready = [i for i in range(n - 1) if perm[i] < perm[i + 1]]
    return WiringDiagram(n, swaps)


def random_points(n: int, seed: int, bound: int = 2**20) -> list[tuple[int, int]]:
    """Random integer points, distinct, checked for general position when small."""
    rng = random.Random(seed)
    while True:
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(-bound, bound), rng.randint(-bound, bound)))
        pts = sorted(pts)
        rng.shuffle(pts)
        if n > 64 or not validate_general_position(pts):
            return pts
