"""Named example bodies."""

from __future__ import annotations

import math

from .body import PlanarBody, disk, make_body, polygon
from .errors import GalleryError
from .geometry import TWO_PI, Point2, unit
from .pieces import CircularArc, Corner, SupportPiece
from .polarity import dual, hull_with_points, intersect_halfplanes
from .selfdual import make_selfdual, make_selfdual_smooth

PI = math.pi


def _positive(name: str, value) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise GalleryError(f"parameter {name} must be a number, got {value!r}") from None
    if not (v > 0.0 and math.isfinite(v)):
        raise GalleryError(f"parameter {name} must be positive, got {value!r}")
    return v


def _integer(name: str, value) -> int:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise GalleryError(f"parameter {name} must be an integer, got {value!r}") from None
    if not v.is_integer():
        raise GalleryError(f"parameter {name} must be an integer, got {value!r}")
    return int(v)


def example2(a: float = 0.5, b: float = 0.5) -> PlanarBody:
    """Upper half disk of radius a+b and two quarter disks of radius b centred at (+-a, 0)."""
    a, b = _positive("a", a), _positive("b", b)
    pieces = [
        SupportPiece(CircularArc(Point2(0.0, 0.0), a + b), 0.0, PI),
        SupportPiece(CircularArc(Point2(-a, 0.0), b), PI, 1.5 * PI),
        SupportPiece(CircularArc(Point2(a, 0.0), b), 1.5 * PI, TWO_PI),
    ]
    return make_body(pieces, "example2")


def fig1c() -> PlanarBody:
    return hull_with_points(disk(), [(0.0, 2.0)])


def fig1d() -> PlanarBody:
    return intersect_halfplanes(disk(), [(1.5 * PI, 0.5)])


def fig2a() -> PlanarBody:
    return make_selfdual(dual(example2(0.5, 0.5)))


def fig2b() -> PlanarBody:
    return make_selfdual(fig1c())


def half_disk_with_edge(a: float) -> PlanarBody:
    """Disk of radius (a^2+1)/a centred at (a, 0), cut by the line x = a."""
    a = _positive("a", a)
    R = (a * a + 1.0) / a
    top, bottom = Point2(a, R), Point2(a, -R)
    pieces = [
        SupportPiece(Corner(top), 0.0, 0.5 * PI),
        SupportPiece(CircularArc(Point2(a, 0.0), R), 0.5 * PI, 1.5 * PI),
        SupportPiece(Corner(bottom), 1.5 * PI, TWO_PI),
    ]
    return make_body(pieces, "half-disk")


def fig2c(a: float = 4.0 / 3.0) -> PlanarBody:
    return make_selfdual(half_disk_with_edge(a))


def regular_polygon(k: int, circumradius: float) -> PlanarBody:
    """Regular k-gon with one vertex on the negative x-axis."""
    verts = [unit(PI + TWO_PI * j / k) * circumradius for j in range(k)]
    return polygon([(v.x, v.y) for v in verts])


def regular_selfdual_polygon(k: int = 3) -> PlanarBody:
    k = _integer("k", k)
    if k < 3 or k % 2 == 0:
        raise GalleryError(f"k must be odd and at least 3, got {k}")
    return regular_polygon(k, math.cos(PI / k) ** -0.5)


def truncated_directions(M: int) -> list[float]:
    """Angles (k/2 +- 2^-m) pi for k in {1, 3}, m = 1..M, plus pi/2 and 3pi/2, deduplicated."""
    angles = [0.5 * PI, 1.5 * PI]
    for m in range(1, M + 1):
        for k in (1, 3):
            for sign in (1.0, -1.0):
                angles.append((k / 2.0 + sign * 2.0 ** -m) * PI)
    out: list[float] = []
    for t in sorted(a % TWO_PI for a in angles):
        if not out or min(abs(t - s) for s in out) > 1e-12:
            if not (out and abs(t - out[0] - TWO_PI) <= 1e-12):
                out.append(t)
    return out


def truncated_hull(M: int) -> PlanarBody:
    M = _integer("M", M)
    if M < 1:
        raise GalleryError(f"M must be at least 1, got {M}")
    return polygon([(math.cos(t), math.sin(t)) for t in truncated_directions(M)])


def infinite_truncated(M: int = 4) -> PlanarBody:
    return make_selfdual_smooth(truncated_hull(M))


_BUILDERS = {
    "disk": (lambda: disk(), ()),
    "example2": (example2, ("a", "b")),
    "fig1a": (lambda: example2(0.5, 0.5), ()),
    "fig1b": (lambda: dual(example2(0.5, 0.5)), ()),
    "fig1c": (fig1c, ()),
    "fig1d": (fig1d, ()),
    "fig2a": (fig2a, ()),
    "fig2b": (fig2b, ()),
    "fig2c": (fig2c, ("a",)),
    "regular_selfdual_polygon": (regular_selfdual_polygon, ("k",)),
    "infinite_truncated": (infinite_truncated, ("M",)),
}

GALLERY_NAMES = tuple(_BUILDERS)


def gallery_params(name: str) -> tuple[str, ...]:
    if name not in _BUILDERS:
        raise GalleryError(f"unknown gallery name {name!r}", code="UNKNOWN_NAME")
    return _BUILDERS[name][1]


def gallery(name: str, params=None) -> PlanarBody:
    """Build a named body; ``params`` is a mapping or a positional sequence."""
    names = gallery_params(name)
    builder = _BUILDERS[name][0]
    if params is None:
        params = {}
    if not isinstance(params, dict):
        params = list(params)
        if len(params) > len(names):
            raise GalleryError(f"{name} takes at most {len(names)} parameters, got {len(params)}")
        params = dict(zip(names, params))
    unknown = set(params) - set(names)
    if unknown:
        raise GalleryError(f"{name} has no parameter(s) {', '.join(sorted(unknown))}")
    body = builder(**params)
    return type(body)(body.pieces, name)
