"""Ham-sandwich cuts of abstract order types by prune and search.

Dually, a cut through a red point and a blue point is a crossing of a red and
a blue line lying on the median levels of both colour classes.  Each round
keeps an interval between two pseudo-verticals where the two tracked levels
cross an odd number of times.  It narrows the interval to a slab between
consecutive crossings of a small sample of the larger class, then discards
the lines of that class that stay clear of its level inside the slab.

Every cut returned is checked against the original colouring.  Sampling
failures that break an invariant are detected and the search is restarted
with a larger sample, so the output is always a verified cut.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable

from .arrangement import ArrangementView, RotatedView
from .chirotope import TripleOracle
from .epsapprox import RangeSpace, build_eps_approx
from .pseudovertical import (
    MINUS_INF, PLUS_INF, Infinity, PseudoVertical, Side, select,
)
from .selection import select_kth

N0 = 16
EPS = 1 / 12
C_FACTOR = 3 / 2
SAMPLE0 = 16
MAX_RESTARTS = 6


class PruneBoundViolated(RuntimeError):
    """More lines survived a pruning step than the approximation allows."""


class _Restart(Exception):
    pass


@dataclass(frozen=True)
class Cut:
    red_point: int
    blue_point: int


@dataclass(frozen=True)
class BiChromatic:
    red: frozenset
    blue: frozenset

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> "BiChromatic":
        labels = list(labels)
        bad = [c for c in labels if c not in ("r", "b")]
        if bad:
            raise ValueError("colour must be r or b, got %r" % bad[0])
        return cls(frozenset(i for i, c in enumerate(labels) if c == "r"),
                   frozenset(i for i, c in enumerate(labels) if c == "b"))

    def validate(self, n: int | None = None) -> None:
        if not self.red or not self.blue:
            raise ValueError("both colour classes must be nonempty")
        if self.red & self.blue:
            raise ValueError("colour classes overlap")
        if n is not None and (self.red | self.blue) != set(range(n)):
            raise ValueError("colour classes must cover all %d points" % n)

    def labels(self) -> list[str]:
        n = len(self.red) + len(self.blue)
        return ["r" if i in self.red else "b" for i in range(n)]


def verify_cut(oracle: TripleOracle, colors: BiChromatic, cut: Cut) -> bool:
    """Both open sides of the line through the cut hold at most half of each class."""
    r, b = cut.red_point, cut.blue_point
    if r not in colors.red or b not in colors.blue:
        return False
    counts = {(True, True): 0, (True, False): 0, (False, True): 0, (False, False): 0}
    for i in colors.red:
        if i != r:
            counts[True, oracle.ccw(r, b, i)] += 1
    for i in colors.blue:
        if i != b:
            counts[False, oracle.ccw(r, b, i)] += 1
    hr, hb = len(colors.red) // 2, len(colors.blue) // 2
    return (counts[True, True] <= hr and counts[True, False] <= hr
            and counts[False, True] <= hb and counts[False, False] <= hb)


def brute_force_cut(oracle: TripleOracle, colors: BiChromatic) -> Cut:
    """First valid red-blue pair in index order; Θ(n^3) queries."""
    for r in sorted(colors.red):
        for b in sorted(colors.blue):
            cut = Cut(r, b)
            if verify_cut(oracle, colors, cut):
                return cut
    raise RuntimeError("no ham-sandwich cut found: oracle is not a chirotope")


def parity_reduce(colors: BiChromatic) -> tuple[BiChromatic, list[int]]:
    """Drop the largest id from each even class.

    A cut of the odd remainder leaves at most ``(m - 2) / 2`` points of an
    even class ``m`` on a side, hence at most ``m / 2`` after reinsertion.
    """
    red, blue = set(colors.red), set(colors.blue)
    dropped = []
    for cls in (red, blue):
        if len(cls) % 2 == 0:
            x = max(cls)
            cls.remove(x)
            dropped.append(x)
    return BiChromatic(frozenset(red), frozenset(blue)), dropped


# ---------------------------------------------------------------------------
# the point where a level meets a pseudo-vertical

@dataclass(frozen=True)
class LevelPoint:
    """Where a pseudo-vertical meets line ``line``.

    ``kind`` is one of

    * ``"vertex"``: next to the crossing of ``line`` and ``partner``, on the
      side of ``partner`` facing the pseudo-vertical (in the turned view if
      ``rotated``),
    * ``"on"``: at the defining crossing ``partner`` (a pair) itself,
    * ``"end"``: at an end of the arrangement, ``partner`` is the sentinel.
    """

    line: int
    kind: str
    partner: object
    rotated: bool = False

    def position(self, view):
        """The crossing or sentinel that stands for this point."""
        if self.kind == "end":
            return self.partner
        if self.kind == "on":
            return self.partner
        return view.crossing(self.partner, self.line)

    def above(self, view: ArrangementView, X: Iterable[int]) -> list[int]:
        """Members of ``X`` strictly above the point."""
        m = self.line
        if self.kind == "end":
            if self.partner is MINUS_INF:
                return [u for u in X if u != m and view.precedes(u, m)]
            return [u for u in X if u != m and view.precedes(m, u)]
        if self.kind == "on":
            p, q = self.partner
            out = [u for u in X if u != p and u != q and not view.below_sorted(u, p, q)]
            if m == q and p in X:
                out.append(p)
            return out
        e = self.partner
        if not self.rotated:
            return [u for u in X if u != m and u != e and not view.below_sorted(u, e, m)]
        # turned over: the partner line passes above the point
        return [u for u in X if u != m and (u == e or not view.below_sorted(u, e, m))]

    def partner_line(self):
        if self.kind == "vertex":
            return self.partner
        if self.kind == "on":
            p, q = self.partner
            return q if self.line == p else p
        return None


def level_point(view, vertical, G, k, S, strategy="randomized", seed=0,
                pv: PseudoVertical | None = None) -> LevelPoint:
    """The line of ``G`` with rank ``k`` at ``vertical`` and where it is met."""
    if vertical is MINUS_INF:
        m = select_kth(G, k, view.precedes, random.Random(seed) if strategy == "randomized" else None)
        return LevelPoint(m, "end", MINUS_INF)
    if vertical is PLUS_INF:
        m = select_kth(G, len(G) - k + 1, view.precedes,
                       random.Random(seed) if strategy == "randomized" else None)
        return LevelPoint(m, "end", PLUS_INF)
    sel = select(view, vertical, G, k, strategy, seed, lines=S, vertical=pv)
    if sel.side == "on":
        return LevelPoint(sel.line, "on", view.crossing(*vertical))
    if sel.anchor is None:
        return LevelPoint(sel.line, "end", MINUS_INF if sel.side == "above" else PLUS_INF)
    return LevelPoint(sel.line, "vertex", sel.anchor, sel.side == "below")


class _EndVertical:
    def __init__(self, which):
        self.which = which

    def side(self, c):
        return Side.RIGHT if self.which is MINUS_INF else Side.LEFT


def _vertical(view, c, S):
    if isinstance(c, Infinity):
        return _EndVertical(c)
    return PseudoVertical(view, c, S)


# ---------------------------------------------------------------------------
# the search

class _Found(Exception):
    def __init__(self, cut):
        self.cut = cut


@dataclass
class _State:
    view: ArrangementView
    oracle: TripleOracle
    colors: BiChromatic
    G1: list[int]
    G2: list[int]
    k1: int
    k2: int
    red_first: bool
    strategy: str
    rng: random.Random
    sample0: int | None
    trace: list | None
    tried: set = field(default_factory=set)
    S: list = field(default_factory=list)
    verticals: dict = field(default_factory=dict)

    def vertical(self, c):
        """Pseudo-vertical through ``c`` in the current sub-arrangement, cached."""
        try:
            return self.verticals[c]
        except KeyError:
            v = self.verticals[c] = _vertical(self.view, c, self.S)
            return v

    def level(self, c, G, k) -> LevelPoint:
        pv = self.vertical(c)
        return level_point(self.view, c, G, k, self.S, self.strategy, self.seed(),
                           pv if isinstance(pv, PseudoVertical) else None)

    def swap(self):
        self.G1, self.G2 = self.G2, self.G1
        self.k1, self.k2 = self.k2, self.k1
        self.red_first = not self.red_first

    def cut_of(self, a, b) -> Cut:
        # a from G1, b from G2
        return Cut(a, b) if self.red_first else Cut(b, a)

    def seed(self):
        return self.rng.randrange(2**32)

    def offer(self, a, b):
        """Check a candidate crossing of a G1 line ``a`` and a G2 line ``b``."""
        cut = self.cut_of(a, b)
        if cut in self.tried:
            return
        self.tried.add(cut)
        if verify_cut(self.oracle, self.colors, cut):
            raise _Found(cut)


def _sign(st: _State, lp: LevelPoint, G2set) -> bool:
    """True when the tracked level of G1 is at or above that of G2 here."""
    view = st.view
    cnt = len(lp.above(view, st.G2))
    o = lp.partner_line()
    if o is not None and o in G2set:
        # the crossing itself may be where both levels meet
        at_vertex = cnt
        if (lp.kind == "vertex" and lp.rotated) or (lp.kind == "on" and lp.line == lp.partner[1]):
            at_vertex -= 1
        if at_vertex == st.k2 - 1:
            st.offer(lp.line, o)
    return cnt <= st.k2 - 1


def _base_case(st: _State):
    view = st.view
    G1, G2 = st.G1, st.G2
    for a in G1:
        for b in G2:
            p, q = view.crossing(a, b)
            n_above = 0
            for u in G1:
                if u != a and not view.below_sorted(u, p, q):
                    n_above += 1
                    if n_above > st.k1 - 1:
                        break
            if n_above != st.k1 - 1:
                continue
            m_above = sum(1 for u in G2 if u != b and not view.below_sorted(u, p, q))
            if m_above == st.k2 - 1:
                st.offer(a, b)
    raise _Restart()


def _sample(st: _State, size, S):
    G1 = st.G1
    if st.strategy == "deterministic":
        rs = RangeSpace(st.view, G1, "pseudo_segment")
        return list(build_eps_approx(rs, EPS, st.seed()).members)
    if size >= len(G1):
        return list(G1)
    return st.rng.sample(G1, size)


def _find_slab(st: _State, S, A, left, right, lp_left, sign_left):
    """Narrow ``(left, right)`` to consecutive sample crossings with a sign change."""
    view = st.view
    G2set = set(st.G2)
    pvl, pvr = st.vertical(left), st.vertical(right)
    ends = {left, right}
    cands = []
    for a, b in itertools.combinations(A, 2):
        c = view.crossing(a, b)
        if c in ends:
            continue
        if pvl.side(c) is Side.RIGHT and pvr.side(c) is Side.LEFT:
            cands.append(c)
    lp_right = None
    if st.strategy == "deterministic" and cands:
        cands.sort(key=functools.cmp_to_key(
            lambda c1, c2: 0 if c1 == c2 else (
                1 if st.vertical(c1).side(c2) is Side.LEFT else -1)))
    while cands:
        if st.strategy == "deterministic":
            c = cands[len(cands) // 2]
        else:
            c = st.rng.choice(cands)
        lp = st.level(c, st.G1, st.k1)
        s = _sign(st, lp, G2set)
        pv = st.vertical(c)
        if s == sign_left:
            left, lp_left = c, lp
            if st.strategy == "deterministic":
                cands = cands[cands.index(c) + 1:]
            else:
                cands = [d for d in cands if d != c and pv.side(d) is Side.RIGHT]
        else:
            right, lp_right = c, lp
            if st.strategy == "deterministic":
                cands = cands[:cands.index(c)]
            else:
                cands = [d for d in cands if d != c and pv.side(d) is Side.LEFT]
    return left, right, lp_left, lp_right


def _round(st: _State, interval):
    view = st.view
    G1, n1 = st.G1, len(st.G1)
    S = st.S = st.G1 + st.G2
    st.verticals = {}
    G2set = set(st.G2)
    left, right = interval
    lpl = st.level(left, G1, st.k1)
    lpr = st.level(right, G1, st.k1)
    sl, sr = _sign(st, lpl, G2set), _sign(st, lpr, G2set)
    if sl == sr:
        raise _Restart()
    off = min(max(int(C_FACTOR * EPS * n1), 1), n1)
    size = st.sample0 if st.sample0 is not None else n1
    attempts = 0
    while True:
        attempts += 1
        A = _sample(st, size, S)
        cl, cr, gl, gr = _find_slab(st, S, A, left, right, lpl, sl)
        if gr is None:
            gr = lpr
        lo, hi = max(st.k1 - off, 1), min(st.k1 + off, n1)
        dlm = st.level(cl, G1, lo)
        dlp = st.level(cl, G1, hi)
        drm = st.level(cr, G1, lo)
        drp = st.level(cr, G1, hi)
        above = set(dlm.above(view, G1)) & set(drm.above(view, G1))
        below_l = set(G1) - set(dlp.above(view, G1)) - {dlp.line}
        below_r = set(G1) - set(drp.above(view, G1)) - {drp.line}
        below = below_l & below_r
        keep = {gl.line, gr.line}
        for g in (gl, gr):
            o = g.partner_line()
            if o is not None:
                keep.add(o)
        above -= keep
        below -= keep
        kept = n1 - len(above) - len(below)
        if kept <= n1 / 2 + 2:
            break
        if len(A) >= n1:
            raise PruneBoundViolated("kept %d of %d lines" % (kept, n1))
        size = min(2 * len(A), n1)
    # a discarded line is clear of the tracked level at both slab walls, on
    # the same side; lines above at one wall only are never dropped, so k1
    # only moves by the lines dropped from above
    assert not above & below, "line dropped both above and below the level"
    drop = above | below
    k1 = st.k1
    st.k1 -= len(above)
    st.G1 = [g for g in G1 if g not in drop]
    if st.trace is not None:
        st.trace.append({"n1": n1, "n2": len(st.G2), "k1": k1, "k2": st.k2,
                         "kept": kept, "dropped_above": len(above), "sample": len(A),
                         "attempts": attempts, "interval": (left, right),
                         "next": (gl.position(view), gr.position(view)),
                         "G1": list(G1), "G1_after": list(st.G1), "G2": list(st.G2),
                         "k1_after": st.k1})
    return gl.position(view), gr.position(view)


def _search(st: _State):
    interval = (MINUS_INF, PLUS_INF)
    while True:
        if len(st.G1) < len(st.G2):
            st.swap()
        if len(st.G1) <= N0:
            _base_case(st)
        interval = _round(st, interval)


def ham_sandwich_cut(oracle: TripleOracle, colors: BiChromatic, seed: int | None = 0,
                     strategy: str = "randomized", view: ArrangementView | None = None,
                     trace: list | None = None) -> Cut:
    """A verified ham-sandwich cut using sidedness queries only.

    ``view`` may be passed to reuse an extreme point found earlier.  When
    ``trace`` is a list, one dict per pruning round is appended to it.
    """
    if strategy not in ("randomized", "deterministic"):
        raise ValueError("unknown strategy %r" % strategy)
    colors.validate(oracle.n)
    if view is None:
        view = ArrangementView(oracle)
    reduced, _ = parity_reduce(colors)
    rng = random.Random(seed)
    tried: set = set()
    for attempt in range(MAX_RESTARTS + 1):
        sample0 = SAMPLE0 << attempt if attempt < MAX_RESTARTS else None
        red, blue = sorted(reduced.red), sorted(reduced.blue)
        st = _State(view, oracle, colors, red, blue, (len(red) + 1) // 2,
                    (len(blue) + 1) // 2, True, strategy, rng, sample0, trace, tried)
        try:
            _search(st)
        except _Found as f:
            return f.cut
        except _Restart:
            if trace is not None:
                trace.append({"restart": attempt})
    raise RuntimeError("no ham-sandwich cut found: oracle is not a chirotope")
