"""Deterministic SVG pictures of rank-2 chamber decompositions.

Cones are clipped exactly (rational Sutherland-Hodgman) to the square
``[-1, 1]^2``; floats appear only when coordinates are written out.
"""
from __future__ import annotations

from fractions import Fraction

from toricvgit.cones import QCone
from toricvgit.errors import DomainError
from toricvgit.gitfan import enumerate_chambers
from toricvgit.grading import DegreeMatrix, monomic_relevant_generators, weight_cone, weight_space

__all__ = ["render_chambers"]

SIZE = 400
MARGIN = 40
PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2", "#edc948", "#9c755f")
_SQUARE = [(Fraction(-1), Fraction(-1)), (Fraction(1), Fraction(-1)),
           (Fraction(1), Fraction(1)), (Fraction(-1), Fraction(1))]


def _clip(poly, n):
    """Keep the part of ``poly`` where ``<n, p> >= 0``."""
    out = []
    for i, p in enumerate(poly):
        q = poly[(i + 1) % len(poly)]
        vp = n[0] * p[0] + n[1] * p[1]
        vq = n[0] * q[0] + n[1] * q[1]
        if vp >= 0:
            out.append(p)
        if (vp > 0 and vq < 0) or (vp < 0 and vq > 0):
            t = vp / (vp - vq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _polygon(cone: QCone):
    poly = list(_SQUARE)
    for n in cone.inequalities:
        poly = _clip(poly, n)
    return poly


def _to_boundary(v):
    m = max(abs(v[0]), abs(v[1]))
    return (Fraction(v[0], m), Fraction(v[1], m))


def _xy(p, scale=Fraction(1)) -> tuple[str, str]:
    half = Fraction(SIZE - 2 * MARGIN, 2)
    x = MARGIN + half * (1 + scale * p[0])
    y = MARGIN + half * (1 - scale * p[1])
    return f"{float(x):.2f}", f"{float(y):.2f}"


def _points(poly) -> str:
    return " ".join(",".join(_xy(p)) for p in poly)


def render_chambers(g: DegreeMatrix) -> str:
    """SVG document showing the weight space, basis cones, chambers and degrees."""
    if g.rank != 2:
        raise DomainError(f"plotting needs a grading group of rank 2, got rank {g.rank}")
    chambers = enumerate_chambers(g)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
        f'<polygon class="weight-space" points="{_points(_polygon(weight_space(g)))}" '
        'fill="#eeeeee" stroke="none"/>',
    ]
    for b in monomic_relevant_generators(g):
        lines.append(
            f'<polygon class="basis-cone" data-basis="{g.monomial(b)}" '
            f'points="{_points(_polygon(weight_cone(g, b)))}" fill="none" '
            'stroke="#999999" stroke-width="0.5" stroke-dasharray="3,3"/>'
        )
    for k, ch in enumerate(chambers):
        color = PALETTE[k % len(PALETTE)]
        lines.append(
            f'<polygon class="chamber" data-index="{k + 1}" points="{_points(_polygon(ch.cone))}" '
            f'fill="{color}" fill-opacity="0.45" stroke="none"/>'
        )
    walls = sorted({r for ch in chambers for r in ch.cone.rays})
    x0, y0 = _xy((0, 0))
    for r in walls:
        x1, y1 = _xy(_to_boundary(r))
        lines.append(f'<line class="wall" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
                     'stroke="black" stroke-width="1.5"/>')
    for k, ch in enumerate(chambers):
        x, y = _xy(_to_boundary(ch.sample_point), Fraction(3, 5))
        lines.append(f'<text class="chamber-label" x="{x}" y="{y}" font-size="14" '
                     f'text-anchor="middle">C{k + 1}</text>')
    by_direction: dict = {}
    for name, d in zip(g.variable_names, g.free_degrees):
        if any(d):
            by_direction.setdefault(_to_boundary(d), []).append(name)
    for p, names in sorted(by_direction.items()):
        x, y = _xy(p, Fraction(9, 10))
        lines.append(f'<circle class="degree" cx="{x}" cy="{y}" r="3" fill="black"/>')
        lines.append(f'<text class="degree-label" x="{x}" y="{y}" dx="6" dy="-6" '
                     f'font-size="12">{",".join(names)}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
