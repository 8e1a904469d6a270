"""Pseudo-verticals through crossings and rank selection along them.

The pseudo-vertical through a crossing ``pq`` (``p`` starting above ``q``) is
traced from the cell just above the crossing.  Going north it walks backwards
along the upper envelope of the lines that start above ``p`` and pass below
the crossing; going south it does the same in the arrangement turned upside
down.  It meets every line exactly once, so each line gets a rank: 1 for the
first line met from the north, ``n`` for the last.

``gamma_traversal`` is the quadratic reference.  ``select_rank`` finds the
``k``-th line of a subset with a linear number of oracle calls.
"""

from __future__ import annotations

import enum
import functools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arrangement import ArrangementView, RotatedView
from .selection import minimum, select_kth, split_kth

N0 = 8


class RankOutOfRange(ValueError):
    pass


class NotAbove(ValueError):
    pass


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    def flip(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class Infinity(enum.Enum):
    """Pseudo-verticals at the two ends of the arrangement."""

    MINUS = "-inf"
    PLUS = "+inf"


MINUS_INF = Infinity.MINUS
PLUS_INF = Infinity.PLUS


@dataclass(frozen=True)
class GammaOrder:
    crossing: tuple[int, int]
    order: tuple[int, ...]

    def rank(self, line: int) -> int:
        return self.order.index(line) + 1

    def restricted(self, B: Iterable[int]) -> list[int]:
        keep = set(B)
        return [a for a in self.order if a in keep]


def _lines(view, lines):
    return list(view.lines) if lines is None else list(lines)


def _latest(view, cur, cands):
    best = cands[0]
    for a in cands[1:]:
        if view.crossing_precedes_on(best, cur, a):
            best = a
    return best


def _northbound(view, p, q, lines, followed=None):
    """Lines met by the northbound ray from crossing ``pq``, nearest first."""
    cur, at = p, q
    met = []
    while True:
        before = [a for a in lines
                  if a != cur and a != at and view.crossing_precedes_on(a, cur, at)]
        if not before:
            break
        a = _latest(view, cur, before)
        if view.precedes(cur, a):
            # a rises from below to cur going forward, so going back it drops
            met.append(a)
            at = a
        else:
            at, cur = cur, a
            if followed is not None:
                followed.append(cur)
    tail = [a for a in lines if a != cur and view.precedes(a, cur)]
    tail.sort(key=functools.cmp_to_key(
        lambda a, b: 0 if a == b else (1 if view.precedes(a, b) else -1)))
    return met + tail


def gamma_traversal(view: ArrangementView, c: tuple[int, int], lines=None) -> GammaOrder:
    """Order in which the pseudo-vertical through ``c`` meets the lines.

    Restricting ``lines`` traces the pseudo-vertical of the sub-arrangement.
    O(n^2) oracle calls.
    """
    lines = _lines(view, lines)
    p, q = view.crossing(*c)
    north = _northbound(view, p, q, lines)
    south = _northbound(RotatedView(view) if not isinstance(view, RotatedView) else view.base,
                        p, q, lines)
    order = tuple(reversed(north)) + (p, q) + tuple(south)
    if sorted(order) != sorted(lines):
        raise RuntimeError("traversal did not meet every line once: oracle is not a chirotope")
    return GammaOrder((p, q), order)


def compute_L(view: ArrangementView, c, lines=None) -> list[int]:
    """Lines below the crossing that start above its upper line."""
    p, q = view.crossing(*c)
    return [a for a in _lines(view, lines)
            if a != p and a != q and view.precedes(a, p) and view.below_sorted(a, p, q)]


def last_crossing_on(view: ArrangementView, u: int, C: Sequence[int]) -> int:
    """The member of ``C`` crossed last along ``u``."""
    if not C:
        raise ValueError("C must be nonempty")
    if u in C:
        raise ValueError("u must not be in C")
    return _latest(view, u, list(C))


def _last_of_preceding(view, u, C):
    # all of C precede u; crossing ua before ub on u iff b is above the crossing ua
    best = C[0]
    for a in C[1:]:
        if not view.below_sorted(a, best, u):
            best = a
    return best


def _first_of_following(view, l, C):
    # all of C follow l; crossing la before lb on l iff b is below the crossing la
    best = C[0]
    for a in C[1:]:
        if view.below_sorted(best, l, a):
            best = a
    return best


def _anchor(view, Lp, m):
    """Envelope line ``e`` whose crossing with ``m`` is where the ray meets ``m``."""
    C = [a for a in Lp if view.precedes(a, m)]
    if not C:
        return None
    return _last_of_preceding(view, m, C)


def _above(view, U, e, m):
    """Members of ``U`` other than ``m`` above the point where the ray meets ``m``."""
    if e is None:
        return [u for u in U if u != m and view.precedes(u, m)]
    return [u for u in U if u != m and u != e and not view.below_sorted(u, e, m)]


def _is_above(view, p, q, m):
    return m != p and m != q and not view.below_sorted(m, p, q)


def rank_above(view: ArrangementView, c, m: int, B: Iterable[int], lines=None) -> int:
    """Rank of ``m`` within ``B`` along the pseudo-vertical through ``c``.

    ``m`` must be above the crossing.  O(n) oracle calls.
    """
    p, q = view.crossing(*c)
    if not _is_above(view, p, q, m):
        raise NotAbove("line %r is not above crossing %r" % (m, (p, q)))
    B = list(B)
    if m not in B:
        raise ValueError("m must be in B")
    e = _anchor(view, compute_L(view, (p, q), lines) + [p], m)
    U = [b for b in B if _is_above(view, p, q, b)]
    return len(_above(view, U, e, m)) + 1


def rank_of(view: ArrangementView, c, m: int, B: Iterable[int], lines=None) -> int:
    """Rank of any member ``m`` of ``B``, above, on, or below the crossing."""
    p, q = view.crossing(*c)
    B = list(B)
    above = [b for b in B if _is_above(view, p, q, b)]
    if m in above:
        return rank_above(view, (p, q), m, B, lines)
    t = len(above)
    if m == p:
        return t + 1
    on = [b for b in (p, q) if b in B]
    if m == q:
        return t + len(on)
    rot = RotatedView(view) if not isinstance(view, RotatedView) else view.base
    below = [b for b in B if b != p and b != q and b not in above]
    r = rank_above(rot, (p, q), m, below, lines)
    return t + len(on) + len(below) - r + 1


# ---------------------------------------------------------------------------
# selection

@dataclass
class _Probe:
    line: int
    anchor: int | None
    above: list[int]


def _probe(view, Lp, U, u):
    e = _anchor(view, Lp, u)
    return _Probe(u, e, _above(view, U, e, u))


def _median_probe(view, Lp, U, seed):
    from .epsapprox import RangeSpace, build_eps_approx

    A = build_eps_approx(RangeSpace(view, list(U), "semispace"), 1 / 12, seed).members
    probes = [_probe(view, Lp, U, u) for u in A]
    probes.sort(key=lambda pr: len(pr.above))
    return probes[(len(probes) - 1) // 2]


def _bridge_randomized(view, Lc, Rc, rng):
    while len(Lc) > 1 or len(Rc) > 1:
        if len(Rc) >= len(Lc):
            r = rng.choice(Rc)
            l = _last_of_preceding(view, r, Lc)
            # r' meeting l after r does cannot be the bridge partner
            Rc = [x for x in Rc if x == r or not view.below_sorted(x, l, r)]
            if len(Rc) == 1:
                Lc = [l]
        else:
            l = rng.choice(Lc)
            r = _first_of_following(view, l, Rc)
            # l' meeting r before l does cannot be the bridge partner
            Lc = [x for x in Lc if x == l or view.below_sorted(l, x, r)]
            if len(Lc) == 1:
                Rc = [r]
    return Lc[0], Rc[0]


def _bridge_envelope(view, Lc, Rc, p):
    """Walk the upper envelope of ``Lc + Rc + [p]`` until it passes into ``Rc``."""
    M = list(Lc) + list(Rc) + [p]
    Rset = set(Rc)
    cur = minimum(M, view.precedes)
    while True:
        later = [b for b in M if b != cur and view.precedes(cur, b)]
        if not later:
            break
        nxt = _first_of_following(view, cur, later)
        if cur not in Rset and nxt in Rset:
            return cur, nxt
        cur = nxt
    raise RuntimeError("no bridge found: oracle is not a chirotope")


def _prune_L(view, p, U, k, L, deterministic, rng):
    def before_on_p(a, b):
        return not view.below_sorted(b, a, p)

    h = (len(L) + 1) // 2
    left, right = split_kth(L, h, before_on_p, None if deterministic else rng)
    rstar = minimum(right, view.precedes)
    left = [l for l in left if view.precedes(l, rstar)]
    if not left:
        return right
    if deterministic:
        v, w = _bridge_envelope(view, left, right, p)
    else:
        v, w = _bridge_randomized(view, left, right, rng)
    c = sum(1 for u in U if not view.below_sorted(u, v, w))
    if k <= c:
        return [a for a in L if a == v or before_on_p(a, v)]
    return [a for a in L if a == w or before_on_p(w, a)]


def _select_above(view, p, q, U, k, L, deterministic, rng, seed):
    """``k``-th of ``U`` (all above ``pq``).  Returns ``(line, anchor)``."""
    Lp = L + [p]
    astar = minimum(Lp, view.precedes)
    S = [u for u in U if view.precedes(u, astar)]
    if k <= len(S):
        return select_kth(S, k, view.precedes, None if deterministic else rng), None
    if S:
        drop = set(S)
        U = [u for u in U if u not in drop]
        k -= len(S)
    while True:
        if len(U) == 1:
            return U[0], _anchor(view, L + [p], U[0])
        if len(U) + len(L) <= N0:
            keep = set(U)
            g = gamma_traversal(view, (p, q), U + L + [p, q])
            m = [a for a in g.order if a in keep][k - 1]
            return m, _anchor(view, L + [p], m)
        if len(L) <= len(U):
            if deterministic:
                pr = _median_probe(view, L + [p], U, seed)
            else:
                pr = _probe(view, L + [p], U, rng.choice(U))
            r = len(pr.above) + 1
            if r == k:
                return pr.line, pr.anchor
            if k < r:
                U = pr.above
            else:
                drop = set(pr.above)
                U = [u for u in U if u != pr.line and u not in drop]
                k -= r
        else:
            L = _prune_L(view, p, U, k, L, deterministic, rng)


@dataclass(frozen=True)
class Selection:
    """Result of a rank query: the line and where the pseudo-vertical meets it.

    ``side`` is ``"above"``, ``"on"`` or ``"below"`` relative to the crossing.
    ``anchor`` is the line whose crossing with ``line`` is the meeting point
    (in the upside-down view for ``"below"``); ``None`` means the meeting point
    is at the left end, before ``line`` crosses anything relevant.
    """

    line: int
    side: str
    anchor: int | None


def select(view: ArrangementView, c, B: Iterable[int], k: int,
           strategy: str = "randomized", seed: int | None = 0,
           lines=None, vertical: "PseudoVertical | None" = None) -> Selection:
    """As :func:`select_rank`, also reporting where the line is met.

    ``vertical`` may carry the sets ``L`` already computed for ``c``.
    """
    if strategy not in ("randomized", "deterministic"):
        raise ValueError("unknown strategy %r" % strategy)
    deterministic = strategy == "deterministic"
    rng = random.Random(seed)
    p, q = view.crossing(*c)
    B = list(dict.fromkeys(B))
    if not 1 <= k <= len(B):
        raise RankOutOfRange("k=%d outside 1..%d" % (k, len(B)))
    lines = _lines(view, lines)
    U, D = [], []
    for b in B:
        if b == p or b == q:
            continue
        (D if view.below_sorted(b, p, q) else U).append(b)
    t = len(U)
    if k <= t:
        L = vertical.L if vertical is not None else compute_L(view, (p, q), lines)
        m, e = _select_above(view, p, q, U, k, L, deterministic, rng, seed)
        return Selection(m, "above", e)
    on = [b for b in (p, q) if b in B]
    if k <= t + len(on):
        return Selection(on[k - t - 1], "on", None)
    rot = RotatedView(view) if not isinstance(view, RotatedView) else view.base
    kk = len(D) - (k - t - len(on)) + 1
    L = vertical.rotated().L if vertical is not None else compute_L(rot, (p, q), lines)
    m, e = _select_above(rot, p, q, D, kk, L, deterministic, rng, seed)
    return Selection(m, "below", e)


def select_rank(view: ArrangementView, c, B: Iterable[int], k: int,
                strategy: str = "randomized", seed: int | None = 0, lines=None) -> int:
    """The line of ``B`` with rank ``k`` along the pseudo-vertical through ``c``.

    Linear expected oracle calls with ``strategy="randomized"``.  The
    deterministic strategy replaces random probes by the median of an
    epsilon-approximation and finds bridges by walking the envelope.
    """
    return select(view, c, B, k, strategy, seed, lines).line


# ---------------------------------------------------------------------------
# comparing pseudo-verticals

class PseudoVertical:
    """The pseudo-vertical through a crossing, prepared for repeated comparisons.

    ``side(c2)`` is the side of ``γ`` on which crossing ``c2`` lies.
    """

    def __init__(self, view: ArrangementView, c, lines=None):
        self.view = view
        self.lines = lines
        self.crossing = view.crossing(*c)
        self._L = None
        self._rot = None
        self._anchors = {}

    @property
    def L(self):
        if self._L is None:
            self._L = compute_L(self.view, self.crossing, self.lines)
        return self._L

    def rotated(self) -> "PseudoVertical":
        """The same pseudo-vertical in the arrangement turned over."""
        return self._rotated()

    def _rotated(self):
        if self._rot is None:
            view = self.view
            rot = RotatedView(view) if not isinstance(view, RotatedView) else view.base
            self._rot = PseudoVertical(rot, self.crossing, self.lines)
        return self._rot

    def side(self, c2) -> Side:
        if isinstance(c2, Infinity):
            return Side.LEFT if c2 is MINUS_INF else Side.RIGHT
        view = self.view
        p, q = self.crossing
        r, s = view.crossing(*c2)
        if (r, s) == (p, q):
            raise ValueError("cannot compare a crossing with itself")
        shared = {p, q} & {r, s}
        if shared:
            (l,) = shared
            o1 = q if l == p else p
            o2 = s if l == r else r
            return Side.LEFT if view.crossing_precedes_on(o2, l, o1) else Side.RIGHT
        ap = view.below_sorted(p, r, s)
        aq = view.below_sorted(q, r, s)
        if not ap and aq:
            return Side.LEFT
        if ap and not aq:
            return Side.RIGHT
        br = view.below_sorted(r, p, q)
        bs = view.below_sorted(s, p, q)
        if not br and bs:
            return Side.RIGHT
        if br and not bs:
            return Side.LEFT
        if not ap:
            # rs lies below both p and q: same question with the arrangement turned over
            return self._rotated()._upper(r, s, not br).flip()
        return self._upper(r, s, br)

    def _upper(self, r, s, br):
        """Side of ``rs`` when it lies above both ``p`` and ``q``.

        ``br`` tells whether ``pq`` in turn lies above both ``r`` and ``s``.
        """
        view = self.view
        p = self.crossing[0]
        if br:
            # r is below pq, so r in L(pq) exactly when it starts above p
            return Side.LEFT if view.precedes(r, p) else Side.RIGHT
        # r and s both above pq: rs is to the left iff s is already above r
        # where the pseudo-vertical meets r
        e = self.anchor(r)
        if e is None or view.below_sorted(s, e, r):
            return Side.RIGHT
        return Side.LEFT

    def anchor(self, m):
        """Envelope line next to where the pseudo-vertical meets ``m`` (above pq)."""
        try:
            return self._anchors[m]
        except KeyError:
            e = self._anchors[m] = _anchor(self.view, self.L + [self.crossing[0]], m)
            return e


def compare_pseudo_verticals(view: ArrangementView, c1, c2, lines=None) -> Side:
    """Side of the pseudo-vertical through ``c1`` on which crossing ``c2`` lies."""
    return PseudoVertical(view, c1, lines).side(c2)
