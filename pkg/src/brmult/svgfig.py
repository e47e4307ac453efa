"""Staircase figures as deterministic SVG 1.1 text.

The drawings are a handful of polylines, dots and two shaded triangles,
and golden-file tests want byte-identical output across platforms and
releases, so the markup is assembled by hand with fixed attribute order
and no metadata.  Coordinates are lattice units; the vertical axis is
flipped at render time since SVG grows downward.
"""

from __future__ import annotations

from fractions import Fraction

from .monomial import MonomialIdeal
from .poly import format_monomial

UNIT = 36  # pixels per lattice step in the top-level width/height

_STAIR = '#1a202c'
_HULL = '#2b6cb0'
_AXIS = '#b8bec9'
_MARK = '#b83232'
_DARK = '#7d879c'
_LIGHT = '#d6dbe4'


def _num(v) -> str:
    """Lattice coordinate as minimal decimal text."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{float(v):.5g}"
    return str(v)


def _points(pts) -> str:
    return " ".join(f"{_num(x)},{_num(y)}" for x, y in pts)


def _staircase(gens) -> list[tuple[int, int]]:
    pts = [(0, gens[0][1])]
    for prev, cur in zip(gens, gens[1:]):
        pts.append((cur[0], prev[1]))
        pts.append((cur[0], cur[1]))
    return pts


def staircase_svg(a: MonomialIdeal, annotations=None) -> str:
    """Figure of the staircase of a, optionally annotated.

    Always drawn: the boundary polyline of the monomial region, one dot
    per minimal generator, and the dashed lower hull of the exponent
    set.  With a classification instance the five anchor points get
    marked and labelled, and the two correction triangles are shaded
    underneath, the darker one on top.
    """
    gens = a.gens
    hull = a.newton_hull()
    marks: list[tuple[str, tuple]] = []
    triangles: list[tuple[str, tuple]] = []
    if annotations is not None:
        inst = annotations
        marks = [
            ("T", inst.point_t),
            ("B", inst.point_b),
            ("P", inst.point_p),
            ("Q", inst.point_q),
            ("A", inst.point_a),
        ]
        triangles = [
            (_LIGHT, (inst.point_p, inst.point_b, inst.point_q)),
            (_DARK, (inst.point_t, inst.point_b, inst.point_q)),
        ]
    width = max(
        [g[0] for g in gens] + [int(p[1][0]) + 1 for p in marks] + [1]
    )
    height = max(
        [g[1] for g in gens] + [int(p[1][1]) + 1 for p in marks] + [1]
    )

    def flip(pt):
        return (pt[0], height - pt[1])

    out = [
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="-1 -1 {width + 2} {height + 2}" '
            f'width="{UNIT * (width + 2)}" height="{UNIT * (height + 2)}">'
        ),
        f"<title>staircase: {', '.join(format_monomial(g) for g in gens)}</title>",
        (
            f'<polyline points="{_points([(0, height), (0, 0), (width, 0)])}" '
            f'fill="none" stroke="{_AXIS}" stroke-width="0.05"/>'
        ),
    ]
    for color, tri in triangles:
        out.append(
            f'<polygon points="{_points(flip(p) for p in tri)}" '
            f'fill="{color}" stroke="none"/>'
        )
    out.append(
        f'<polyline points="{_points(flip(p) for p in _staircase(gens))}" '
        f'fill="none" stroke="{_STAIR}" stroke-width="0.08" '
        f'stroke-linecap="square"/>'
    )
    if len(hull) > 1:
        out.append(
            f'<polyline points="{_points(flip(p) for p in hull)}" '
            f'fill="none" stroke="{_HULL}" stroke-width="0.06" '
            f'stroke-dasharray="0.28,0.18"/>'
        )
    for g in gens:
        x, y = flip(g)
        out.append(
            f'<circle cx="{_num(x)}" cy="{_num(y)}" r="0.14" '
            f'fill="{_STAIR}"/>'
        )
    for name, pt in marks:
        x, y = flip(pt)
        out.append(
            f'<circle cx="{_num(x)}" cy="{_num(y)}" r="0.16" '
            f'fill="{_MARK}"/>'
        )
        out.append(
            f'<text x="{_num(x + Fraction(1, 4))}" '
            f'y="{_num(y - Fraction(1, 4))}" font-size="0.7" '
            f'font-family="sans-serif" fill="{_MARK}">{name}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
