"""Self-dual bodies by gluing the upper half of one body to the lower half of another."""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import minimize_scalar

from .body import PlanarBody, make_body, restrict, rotate
from .calculus import census, locate
from .errors import PreconditionError
from .geometry import TWO_PI, Point2, canonical
from .polarity import dual

GLUE_TOL = 1e-9
SELFDUAL_SAMPLES = 8192
ROTATION_GRID = 4096
ROTATION_XTOL = 1e-10


def max_norm_angle(body: PlanarBody) -> float:
    """Position angle of a boundary point of maximal norm.

    Ties (within a relative 1e-12) go to the smallest angle in [0, 2pi).
    """
    grid = np.linspace(0.0, TWO_PI, ROTATION_GRID, endpoint=False)
    values = np.array([body.radial(t) for t in grid])
    candidates = [(float(v), float(t)) for t, v in zip(grid, values)]
    for p in body.pieces:
        if p.is_corner:
            candidates.append((p.kind.point.norm(), p.kind.point.angle()))
    step = grid[1] - grid[0]
    n = len(grid)
    for i in range(n):
        if values[i] >= values[i - 1] and values[i] >= values[(i + 1) % n]:
            res = minimize_scalar(
                lambda t: -body.radial(t),
                bounds=(grid[i] - step, grid[i] + step),
                method="bounded",
                options={"xatol": ROTATION_XTOL},
            )
            candidates.append((-float(res.fun), canonical(float(res.x))))
    best = max(v for v, _ in candidates)
    ties = [t for v, t in candidates if v >= best - 1e-12 * best]
    return min(ties)


def normalize_rotation(body: PlanarBody) -> PlanarBody:
    """Rotate so that a boundary point of maximal norm lies on the positive x-axis."""
    angle = max_norm_angle(body)
    if angle <= 1e-12 or TWO_PI - angle <= 1e-12:
        return body
    return rotate(body, -angle)


def extent(body: PlanarBody) -> tuple[float, float]:
    """The common value of radial and support function at +e1 and -e1.

    Raises PRECONDITION_EXTENT when they differ.
    """
    out = []
    for theta in (0.0, math.pi):
        rho, h = body.radial(theta), body.support(theta)
        if abs(rho - h) > GLUE_TOL * max(1.0, h):
            raise PreconditionError(
                f"radial {rho:.12g} and support {h:.12g} differ at angle {theta:.6g}",
                code="PRECONDITION_EXTENT",
            )
        out.append(h)
    return out[0], out[1]


def glue_halves(L1: PlanarBody, L2: PlanarBody) -> PlanarBody:
    """Upper half (normals in [0, pi]) of L1 joined to the lower half of L2."""
    c1, c2 = extent(L1), extent(L2)
    for a, b, side in ((c1[0], c2[0], "+e1"), (c1[1], c2[1], "-e1")):
        if abs(a - b) > GLUE_TOL:
            raise PreconditionError(
                f"extents at {side} differ: {a:.12g} vs {b:.12g}", code="PRECONDITION_MISMATCH"
            )
    pieces = restrict(L1, 0.0, math.pi) + restrict(L2, math.pi, TWO_PI)
    return make_body(pieces, "glue")


def make_selfdual(body: PlanarBody) -> PlanarBody:
    return glue_halves(body, dual(body))


def _smooth_at(body: PlanarBody, theta: float) -> bool:
    x = Point2(math.cos(theta), math.sin(theta)) * body.radial(theta)
    return locate(body, x).kind == "smooth"


def make_selfdual_smooth(body: PlanarBody) -> PlanarBody:
    """Self-dual gluing for bodies without non-exposed points whose corners are polyhedral."""
    c = census(body)
    if c.n != 0:
        raise PreconditionError(f"body has {c.n} non-exposed points", code="PRECONDITION_NONEXPOSED")
    if c.m != 0 or c.f != 0:
        raise PreconditionError(
            f"body has {c.m} mixed and {c.f} free corners", code="PRECONDITION_CORNERTYPE"
        )
    extent(body)
    if _smooth_at(body, 0.0) != _smooth_at(body, math.pi):
        raise PreconditionError(
            "exactly one of the boundary points on the x-axis is smooth", code="PRECONDITION_SMOOTHMATCH"
        )
    return make_selfdual(body)


def selfdual_deviation(body: PlanarBody, samples: int = SELFDUAL_SAMPLES) -> float:
    """sup |h(t) - 1/rho(t + pi)| / max h over a uniform grid."""
    thetas = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    h = np.array([body.support(t) for t in thetas])
    hd = np.array([1.0 / body.radial(t + math.pi) for t in thetas])
    return float(np.max(np.abs(h - hd)) / np.max(h))


def is_selfdual(body: PlanarBody, tol: float = 1e-8) -> tuple[bool, float]:
    dev = selfdual_deviation(body)
    return dev <= tol, dev
