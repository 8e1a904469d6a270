"""Derive the non-Pappus wiring diagram shipped in ``pseudovert.fixtures``.

Start from an exact Pappus configuration (nine points, nine collinear
triples, no other collinear triple).  Random small perturbations realize
sign patterns on the nine triples; the patterns never realized are the ones
Pappus' theorem forbids.  Taking one of them, with exact signs on all other
triples, gives an abstract order type.  It is turned into a wiring diagram by
sweeping its arrangement, and the diagram's chirotope is checked to match.

Rare but realizable patterns also go unseen, so each unseen pattern is
handed to a local search that tries to realize its full chirotope with
floating-point points.  Only patterns that resist the search are kept; in
practice a mirror pair survives.  This is evidence, not a proof of
non-realizability.

Run: python tools/derive_non_pappus.py
"""

import itertools
import random
from fractions import Fraction as F
from math import comb

from pseudovert.arrangement import ArrangementView, sweep_wiring
from pseudovert.chirotope import TripleTable, WiringDiagram, table_from_wiring


def meet(p1, p2, p3, p4):
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p1, p2, p3, p4
    d = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    a = x1 * y2 - y1 * x2
    b = x3 * y4 - y3 * x4
    return ((a * (x3 - x4) - (x1 - x2) * b) / d, (a * (y3 - y4) - (y1 - y2) * b) / d)


def det(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def pappus():
    A = [(F(0), F(0)), (F(4), F(2)), (F(10), F(5))]  # y = x / 2
    B = [(F(1), F(7)), (F(5), F(8)), (F(13), F(10))]  # y = x / 4 + 27 / 4
    X = meet(A[0], B[1], A[1], B[0])
    Y = meet(A[0], B[2], A[2], B[0])
    Z = meet(A[1], B[2], A[2], B[1])
    pts = A + B + [X, Y, Z]
    lines = [(0, 1, 2), (3, 4, 5), (0, 6, 4), (1, 6, 3), (0, 7, 5), (2, 7, 3),
             (1, 8, 5), (2, 8, 4), (6, 7, 8)]
    return pts, lines


def full_pattern(pts, lines, pat):
    forced = {tuple(sorted(t)): s for t, s in zip(lines, pat)}
    return {t: (forced[t] if t in forced else det(*(pts[i] for i in t)) > 0)
            for t in itertools.combinations(range(9), 3)}


def violations(P, target):
    return sum(1 for t, s in target.items() if (det(*(P[i] for i in t)) > 0) != s)


def realize(pts, target, restarts=30, steps=3000, seed=0):
    """Greedy random search; returns the fewest violated triples reached."""
    rng = random.Random(seed)
    P0 = [(float(x), float(y)) for x, y in pts]
    best = len(target)
    for _ in range(restarts):
        P = [(x + rng.gauss(0, 0.3), y + rng.gauss(0, 0.3)) for x, y in P0]
        v = violations(P, target)
        step = 0.5
        for it in range(steps):
            i = rng.randrange(9)
            Q = list(P)
            Q[i] = (P[i][0] + rng.gauss(0, step), P[i][1] + rng.gauss(0, step))
            w = violations(Q, target)
            if w <= v:
                P, v = Q, w
            if v == 0:
                return 0
            if it % 500 == 499:
                step *= 0.5
        best = min(best, v)
    return best


def main():
    pts, lines = pappus()
    zero = [t for t in itertools.combinations(range(9), 3) if det(*(pts[i] for i in t)) == 0]
    assert sorted(zero) == sorted(tuple(sorted(t)) for t in lines), zero
    rng = random.Random(1)
    seen = set()
    for _ in range(200000):
        eps = F(1, 10**6)
        q = [(x + eps * rng.uniform(-1, 1), y + eps * rng.uniform(-1, 1)) for x, y in pts]
        qf = [(float(x), float(y)) for x, y in q]
        pat = tuple(det(*(qf[i] for i in sorted(t))) > 0 for t in lines)
        seen.add(pat)
    missing = sorted(set(itertools.product((False, True), repeat=9)) - seen)
    print("patterns realized:", len(seen), "missing:", missing)
    for pat in missing:
        left = realize(pts, full_pattern(pts, lines, pat))
        if left == 0:
            print(pat, "realized by search, dropped")
            continue
        signs = bytearray(comb(9, 3))
        idx = 0
        forced = {tuple(sorted(t)): s for t, s in zip(lines, pat)}
        for k in range(9):
            for j in range(k):
                for i in range(j):
                    t = (i, j, k)
                    signs[idx] = forced[t] if t in forced else det(pts[i], pts[j], pts[k]) > 0
                    idx += 1
        table = TripleTable(9, signs)
        try:
            wires, swaps = sweep_wiring(ArrangementView(table))
        except RuntimeError as e:
            print(pat, "not a chirotope:", e)
            continue
        w = WiringDiagram(9, swaps)
        back = table_from_wiring(w)
        ok = all(back.ccw(a, b, c) == table.ccw(wires[a], wires[b], wires[c])
                 for a, b, c in itertools.permutations(range(9), 3))
        print(pat, "unrealized (min violations %d)" % left,
              "wires", wires, "swaps", swaps, "round trip", ok)


if __name__ == "__main__":
    main()
