"""Plain-text point, wiring and color files.

Point file::

    n
    x y [c]        (n lines; c is r or b)

Wiring file::

    n
    s1 s2 ... s_{n(n-1)/2}

Colors file (one label per point, for abstract inputs)::

    n
    c1 c2 ... cn
"""

from __future__ import annotations

from dataclasses import dataclass

from .chirotope import COORD_BOUND, WiringDiagram
from .hamsandwich import BiChromatic


class ParseError(ValueError):
    pass


@dataclass
class PointFile:
    points: list[tuple[int, int]]
    colors: list[str] | None = None


def _lines(text):
    return [ln for ln in text.split("\n") if ln.strip()]


def _count(lines, what):
    if not lines:
        raise ParseError("%s file is empty" % what)
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError("line 1: expected a count, got %r" % lines[0].strip()) from None
    if n < 0:
        raise ParseError("line 1: negative count")
    return n


def _int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise ParseError("line %d: not an integer: %r" % (lineno, tok)) from None


def parse_points(text: str) -> PointFile:
    lines = _lines(text)
    n = _count(lines, "point")
    if len(lines) - 1 != n:
        raise ParseError("expected %d point lines, found %d" % (n, len(lines) - 1))
    pts, cols = [], []
    for i, ln in enumerate(lines[1:], start=2):
        tok = ln.split()
        if len(tok) not in (2, 3):
            raise ParseError("line %d: expected 'x y [c]'" % i)
        x, y = _int(tok[0], i), _int(tok[1], i)
        if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
            raise ParseError("line %d: coordinate exceeds 2^30" % i)
        pts.append((x, y))
        if len(tok) == 3:
            if tok[2] not in ("r", "b"):
                raise ParseError("line %d: color must be r or b" % i)
            cols.append(tok[2])
    if cols and len(cols) != n:
        raise ParseError("either every point has a color or none does")
    if len(set(pts)) != n:
        raise ParseError("duplicate points")
    return PointFile(pts, cols or None)


def format_points(pf: PointFile) -> str:
    out = ["%d" % len(pf.points)]
    for i, (x, y) in enumerate(pf.points):
        out.append("%d %d %s" % (x, y, pf.colors[i]) if pf.colors else "%d %d" % (x, y))
    return "\n".join(out) + "\n"


def parse_wiring(text: str) -> WiringDiagram:
    lines = _lines(text)
    n = _count(lines, "wiring")
    swaps = [_int(t, 2) for ln in lines[1:] for t in ln.split()]
    w = WiringDiagram(n, swaps)
    try:
        w.validate()
    except ValueError as e:
        raise ParseError("invalid wiring: %s" % e) from None
    return w


def format_wiring(w: WiringDiagram) -> str:
    return "%d\n%s\n" % (w.n, " ".join(str(s) for s in w.swaps))


def parse_colors(text: str) -> list[str]:
    lines = _lines(text)
    n = _count(lines, "colors")
    labels = [t for ln in lines[1:] for t in ln.split()]
    if len(labels) != n:
        raise ParseError("expected %d labels, found %d" % (n, len(labels)))
    bad = [t for t in labels if t not in ("r", "b")]
    if bad:
        raise ParseError("color must be r or b, got %r" % bad[0])
    return labels


def format_colors(labels) -> str:
    return "%d\n%s\n" % (len(labels), " ".join(labels))


def colors_from_labels(labels) -> BiChromatic:
    try:
        return BiChromatic.from_labels(labels)
    except ValueError as e:
        raise ParseError(str(e)) from None


def read_text(path: str) -> str:
    with open(path, "rb") as f:
        data = f.read()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise ParseError("%s: not ASCII" % path) from None
    if "\r" in text:
        raise ParseError("%s: expected LF line endings" % path)
    return text
