"""Query access to the dual pseudo-line arrangement of an order type.

A point and its dual pseudo-line share an identifier.  The arrangement is
fixed by choosing an extreme point ``x``: every other line starts below ``x``,
two other lines ``a, b`` start in the order given by ``ccw(x, a, b)``, and a
line ``r`` is below the crossing of ``p`` and ``q`` (``p`` starting above)
iff ``ccw(p, q, r)``.
"""

from __future__ import annotations

import collections
import functools
import itertools

from .chirotope import TripleOracle


def _circular_order(oracle, p1):
    """Other points sorted counterclockwise around ``p1``, starting anywhere."""
    others = [i for i in range(oracle.n) if i != p1]
    p2 = others[0]
    left, right = [], []
    for c in others[1:]:
        (left if oracle.ccw(p1, p2, c) else right).append(c)

    def sort_half(half):
        # merge sort on the angular comparator; each half spans less than pi
        if len(half) <= 1:
            return half
        mid = len(half) // 2
        a, b = sort_half(half[:mid]), sort_half(half[mid:])
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            if oracle.ccw(p1, a[i], b[j]):
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return out

    return [p2] + sort_half(left) + sort_half(right)


def _melkman(oracle, chain):
    """Hull of a simple polyline with orientation tests only (ccw deque)."""
    def left(a, b, c):
        return oracle.ccw(a, b, c)

    a, b, c = chain[0], chain[1], chain[2]
    if left(a, b, c):
        hull = collections.deque((c, a, b, c))
    else:
        hull = collections.deque((c, b, a, c))
    for v in chain[3:]:
        if left(hull[-2], hull[-1], v) and left(v, hull[0], hull[1]):
            continue
        while not left(hull[-2], hull[-1], v):
            hull.pop()
        hull.append(v)
        while not left(v, hull[0], hull[1]):
            hull.popleft()
        hull.appendleft(v)
    hull.popleft()
    return list(hull)


def find_extreme_point(oracle: TripleOracle) -> int:
    """A point on the convex hull, using O(n log n) orientation queries."""
    n = oracle.n
    if n < 3:
        return 0
    p1 = 0
    order = _circular_order(oracle, p1)
    for u, v in zip(order, order[1:] + order[:1]):
        if u != v and not oracle.ccw(p1, u, v):
            return p1
    if len(order) < 3:
        return p1
    return _melkman(oracle, order)[0]


def is_extreme(oracle: TripleOracle, a: int) -> bool:
    """Brute force: some line through ``a`` has every other point on one side."""
    n = oracle.n
    for b in range(n):
        if b == a:
            continue
        sides = {oracle.ccw(a, b, c) for c in range(n) if c != a and c != b}
        if len(sides) <= 1:
            return True
    return False


class ArrangementView:
    """The dual arrangement of ``oracle`` anchored at extreme point ``x``.

    Every predicate costs a constant number of oracle calls.
    """

    def __init__(self, oracle: TripleOracle, x: int | None = None):
        self.oracle = oracle
        self.n = oracle.n
        self.x = find_extreme_point(oracle) if x is None else x

    @property
    def lines(self):
        return range(self.n)

    def rotated(self) -> "ArrangementView":
        return RotatedView(self)

    def precedes(self, a, b) -> bool:
        """``a`` starts above ``b``."""
        x = self.x
        if a == x:
            return b != x
        if b == x:
            return False
        return self.oracle.ccw(x, a, b)

    def below(self, r, u, v) -> bool:
        """Line ``r`` passes below the crossing of ``u`` and ``v``."""
        if self.precedes(u, v):
            return self.oracle.ccw(u, v, r)
        return self.oracle.ccw(v, u, r)

    def below_sorted(self, r, p, q) -> bool:
        """As :meth:`below` when ``p`` is already known to precede ``q``."""
        return self.oracle.ccw(p, q, r)

    def crossing(self, u, v) -> tuple[int, int]:
        """Canonical crossing ``(p, q)`` with ``p`` preceding ``q``."""
        if u == v:
            raise ValueError("a crossing needs two distinct lines")
        return (u, v) if self.precedes(u, v) else (v, u)

    def crossing_precedes_on(self, a, p, b) -> bool:
        """On line ``p``, the crossing with ``a`` comes before the one with ``b``."""
        # b below the crossing ap exactly when b has not yet crossed p, which
        # means b is still below p iff it started below p.
        return self.below(b, a, p) == self.precedes(p, b)


class RotatedView(ArrangementView):
    """The same arrangement turned by 180 degrees.

    Start order is preserved (the right end of the original, read bottom to
    top, is the start order again); above and below trade places, and the
    crossings along every line are visited in reverse.
    """

    def __init__(self, base: ArrangementView):
        self.base = base
        self.oracle = base.oracle
        self.n = base.n
        self.x = base.x

    def rotated(self):
        return self.base

    def precedes(self, a, b):
        return self.base.precedes(a, b)

    def below(self, r, u, v):
        return not self.base.below(r, u, v)

    def below_sorted(self, r, p, q):
        return not self.oracle.ccw(p, q, r)


def ordered_lines(view: ArrangementView, lines) -> list[int]:
    """Lines sorted by start order (brute force, for references and tests)."""
    return sorted(lines, key=functools.cmp_to_key(
        lambda a, b: 0 if a == b else (-1 if view.precedes(a, b) else 1)))


def sweep_wiring(view: ArrangementView, lines=None):
    """Explicit wiring diagram of the view's arrangement by topological sweep.

    Returns ``(wires, swaps)``: ``wires`` lists line ids in start order (wire
    ``i`` is ``wires[i]``) and ``swaps`` are 1-based slots.  The lowest ready
    crossing is swept first.  O(n^3) queries; a reference, not an algorithm.
    """
    lines = list(view.lines if lines is None else lines)
    wires = ordered_lines(view, lines)
    n = len(wires)
    # crossing sequence along each line, in order
    seq = {}
    for p in wires:
        others = [a for a in wires if a != p]
        seq[p] = sorted(others, key=functools.cmp_to_key(
            lambda a, b: 0 if a == b else (-1 if view.crossing_precedes_on(a, p, b) else 1)))
    nxt = {p: 0 for p in wires}
    perm = list(wires)
    swaps = []
    for _ in range(n * (n - 1) // 2):
        for s in range(n - 2, -1, -1):
            u, v = perm[s], perm[s + 1]
            if nxt[u] < n - 1 and nxt[v] < n - 1 and seq[u][nxt[u]] == v and seq[v][nxt[v]] == u:
                break
        else:
            raise RuntimeError("no crossing ready: oracle is not a valid arrangement")
        perm[s], perm[s + 1] = v, u
        nxt[u] += 1
        nxt[v] += 1
        swaps.append(s + 1)
    return wires, swaps


def all_crossings(view: ArrangementView, lines=None):
    lines = list(view.lines if lines is None else lines)
    return [view.crossing(u, v) for u, v in itertools.combinations(lines, 2)]
