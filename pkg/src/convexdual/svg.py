"""SVG drawing of a body with glyphs at its classified boundary points."""

from __future__ import annotations

from .body import PlanarBody
from .calculus import ExtremalClass, special_faces

ARC_POINTS = 512
PADDING = 0.02

GLYPHS = {
    ExtremalClass.NON_EXPOSED: "*",
    ExtremalClass.POLYHEDRAL_CORNER: "+",
    ExtremalClass.MIXED_CORNER: "@",
    ExtremalClass.FREE_CORNER: "o",
}


def _f(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def boundary_polyline(body: PlanarBody, arc_points: int = ARC_POINTS) -> list[tuple[float, float]]:
    pts = []
    for p in body.pieces:
        if p.is_corner:
            pts.append((p.kind.point.x, p.kind.point.y))
            continue
        for k in range(arc_points):
            c = p.contact(p.start + p.width * k / (arc_points - 1))
            pts.append((c.x, c.y))
    return pts


def render_svg(
    body: PlanarBody,
    show_markers: bool = True,
    scale: float = 200.0,
    align_origin: bool = True,
) -> str:
    """An SVG 1.1 document; y is flipped so that the picture reads like the plane."""
    pts = [(x * scale, -y * scale) for x, y in boundary_polyline(body)]
    xs = [p[0] for p in pts] + ([0.0] if align_origin else [])
    ys = [p[1] for p in pts] + ([0.0] if align_origin else [])
    w, h = max(xs) - min(xs), max(ys) - min(ys)
    pad = PADDING * max(w, h)
    x0, y0 = min(xs) - pad, min(ys) - pad
    W, H = w + 2 * pad, h + 2 * pad
    stroke = max(W, H) / 400.0

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_f(x0)} {_f(y0)} {_f(W)} {_f(H)}" width="{_f(W)}" height="{_f(H)}">',
    ]
    d = "M " + " L ".join(f"{_f(x)} {_f(y)}" for x, y in pts) + " Z"
    lines.append(f'<path d="{d}" fill="none" stroke="black" stroke-width="{_f(stroke)}"/>')
    if align_origin:
        r = 0.03 * max(W, H)
        lines.append(
            f'<path d="M {_f(-r)} 0.000000 L {_f(r)} 0.000000 M 0.000000 {_f(-r)} L 0.000000 {_f(r)}" '
            f'stroke="gray" stroke-width="{_f(stroke / 2)}"/>'
        )
    if show_markers:
        size = 0.06 * max(W, H)
        for face, label in special_faces(body):
            if label not in GLYPHS:
                continue
            lines.append(
                f'<text x="{_f(face.a.x * scale)}" y="{_f(-face.a.y * scale)}" font-size="{_f(size)}" '
                f'text-anchor="middle" dominant-baseline="central">{GLYPHS[label]}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
