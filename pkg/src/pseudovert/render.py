"""SVG drawings of wiring diagrams with an optional pseudo-vertical.

The output is built by string formatting only, so it is byte-stable for a
given input.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .arrangement import ArrangementView, sweep_wiring
from .pseudovertical import PseudoVertical, Side, gamma_traversal

STEP = 40
TRACK = 30
MARGIN = 30


@dataclass
class RenderSpec:
    view: ArrangementView
    highlight: tuple[int, int] | None = None
    width: int | None = None
    height: int | None = None


def _tracks(wires, swaps):
    """Wire order after each step: ``perms[t]`` is the order at grid column t."""
    perm = list(wires)
    perms = [list(perm)]
    for s in swaps:
        perm[s - 1], perm[s] = perm[s], perm[s - 1]
        perms.append(list(perm))
    return perms


def _gamma_points(view, c, wires, swaps, perms):
    """Grid points where the pseudo-vertical through ``c`` meets each line, in order."""
    order = gamma_traversal(view, c).order
    pv = PseudoVertical(view, c)
    p, q = pv.crossing
    steps = {}
    for t, s in enumerate(swaps):
        u, v = perms[t][s - 1], perms[t][s]
        steps[frozenset((u, v))] = (t, s)
    t0, s0 = steps[frozenset((p, q))]
    N = len(swaps)
    pts = []
    for m in order:
        if m in (p, q):
            pt = (t0 + 0.5, s0 - 0.5)
        else:
            left, right = -1, N
            for a in wires:
                if a == m:
                    continue
                t, _ = steps[frozenset((a, m))]
                if pv.side(view.crossing(a, m)) is Side.LEFT:
                    left = max(left, t)
                else:
                    right = min(right, t)
            x = (left + 1 + right) // 2
            pt = (x, perms[x].index(m))
        if not pts or pts[-1] != pt:
            pts.append(pt)
    return order, pts


def _xy(pt):
    return "%g,%g" % (MARGIN + pt[0] * STEP, MARGIN + pt[1] * TRACK)


def render_svg(spec: RenderSpec) -> str:
    view = spec.view
    wires, swaps = sweep_wiring(view)
    perms = _tracks(wires, swaps)
    n, N = len(wires), len(swaps)
    w = spec.width or 2 * MARGIN + N * STEP + STEP
    h = spec.height or 2 * MARGIN + max(n - 1, 0) * TRACK
    vw = 2 * MARGIN + N * STEP + STEP
    vh = 2 * MARGIN + max(n - 1, 0) * TRACK
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
           'viewBox="0 0 %d %d">' % (w, h, vw, vh),
           '<g fill="none" stroke="black" stroke-width="1.5">']
    for m in wires:
        pts = [(t, perms[t].index(m)) for t in range(N + 1)]
        out.append('<polyline class="wire" data-line="%d" points="%s"/>'
                   % (m, " ".join(_xy(pt) for pt in pts)))
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="11">')
    for i, m in enumerate(wires):
        out.append('<text x="%d" y="%d" text-anchor="end">%s</text>'
                   % (MARGIN - 6, MARGIN + i * TRACK + 4, escape(str(m))))
    out.append("</g>")
    if spec.highlight is not None:
        order, pts = _gamma_points(view, spec.highlight, wires, swaps, perms)
        top = (pts[0][0], -0.6)
        bottom = (pts[-1][0], n - 0.4)
        path = [top] + pts + [bottom]
        out.append('<polyline class="gamma" data-order="%s" fill="none" stroke="red" '
                   'stroke-width="1.5" stroke-dasharray="3,3" points="%s"/>'
                   % (" ".join(map(str, order)), " ".join(_xy(pt) for pt in path)))
        p, q = view.crossing(*spec.highlight)
        cx, cy = _xy(pts[order.index(p)] if p in order else pts[0]).split(",")
        out.append('<circle class="crossing" cx="%s" cy="%s" r="3" fill="red"/>' % (cx, cy))
    out.append("</svg>")
    return "\n".join(out) + "\n"
