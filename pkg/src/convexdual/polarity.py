"""Polar and dual bodies, convex hulls with points, and halfplane cuts.

The polar is built piece by piece from the boundary features of the input:
an edge with normal ``beta`` becomes a corner at ``u(beta)/h(beta)``, a corner
becomes an edge (a junction jump) at its position angle, and an arc becomes
its exact :class:`~convexdual.pieces.PolarArc`.  Normal angles of the polar
are position angles of the original, so the feature order carries over.
"""

from __future__ import annotations

import math

import numpy as np

from .body import PlanarBody, make_body, reflect, restrict
from .errors import NumericNonconvergence
from .geometry import TWO_PI, Point2, unit, unwrap_from
from .pieces import Corner, SupportPiece

HULL_GRID = 4096
BISECT_MAXITER = 200


def _tagged(prefix: str, body: PlanarBody) -> str | None:
    return f"{prefix}:{body.tag}" if body.tag else prefix


def polar(body: PlanarBody) -> PlanarBody:
    out = []
    for f in body.features:
        if f.kind == "edge":
            junc = body.junctions[f.index]
            h = body.pieces[f.index].support(body.pieces[f.index].start)
            out.append(SupportPiece(Corner(unit(junc.angle) / h), f.pos_start, f.pos_end))
        elif f.kind == "arc":
            out.append(SupportPiece(body.pieces[f.index].kind.polar(), f.pos_start, f.pos_end))
        # a corner becomes the junction jump between its neighbours' images
    return make_body(out, _tagged("polar-of", body))


def dual(body: PlanarBody) -> PlanarBody:
    out = reflect(polar(body))
    return PlanarBody(out.pieces, _tagged("dual-of", body))


def dual_boundary_point(body: PlanarBody, theta: float) -> Point2:
    """Boundary point of the dual body in direction ``theta``."""
    return unit(theta) / body.support(theta + math.pi)


def bisect_sign_change(f, lo: float, hi: float, xtol: float = 1e-15) -> tuple[float, float]:
    """Shrink [lo, hi] with f(lo) <= 0 < f(hi) (or the reverse) around the sign change."""
    flo = f(lo)
    lo_negative = flo <= 0.0
    for _ in range(BISECT_MAXITER):
        if hi - lo <= xtol * max(1.0, abs(lo)):
            return lo, hi
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return lo, hi
        if (f(mid) <= 0.0) == lo_negative:
            lo = mid
        else:
            hi = mid
    raise NumericNonconvergence(f"bisection did not converge on [{lo!r}, {hi!r}]")


def hull_with_points(body: PlanarBody, points) -> PlanarBody:
    """Convex hull of ``body`` and a finite list of points.

    Points inside the body (or on its boundary) leave it unchanged.
    """
    out = body
    for p in points:
        out = _hull_with_point(out, Point2(float(p[0]), float(p[1])))
    return out


def _hull_with_point(body: PlanarBody, p: Point2) -> PlanarBody:
    def gap(theta):
        return p.dot(unit(theta)) - body.support(theta)

    grid = np.linspace(0.0, TWO_PI, HULL_GRID, endpoint=False)
    values = np.array([gap(t) for t in grid])
    k = int(np.argmax(values))
    if values[k] <= body.eps_len:
        return body
    step = grid[1] - grid[0]
    # walk down from the maximum to the first non-positive sample on each side
    i = k
    while values[i % HULL_GRID] > 0.0:
        i -= 1
    lo1, hi1 = bisect_sign_change(gap, i * step, (i + 1) * step)
    j = k
    while values[j % HULL_GRID] > 0.0:
        j += 1
    lo2, hi2 = bisect_sign_change(gap, (j - 1) * step, j * step)
    theta1 = 0.5 * (lo1 + hi1)
    theta2 = 0.5 * (lo2 + hi2)
    pieces = restrict(body, theta2, theta1 + TWO_PI)
    pieces.append(SupportPiece(Corner(p), theta1 + TWO_PI, theta2 + TWO_PI))
    return make_body(pieces, _tagged("hull-of", body))


def intersect_halfplanes(body: PlanarBody, halfplanes) -> PlanarBody:
    """Intersect with halfplanes {x : <x, u(normal)> <= offset}, offset > 0.

    Inactive halfplanes are dropped.
    """
    out = body
    for normal, offset in halfplanes:
        if offset <= 0.0:
            raise ValueError("halfplane must contain a neighbourhood of the origin (offset > 0)")
        out = _cut(out, float(normal), float(offset))
    return out


def _cut(body: PlanarBody, nu: float, c: float) -> PlanarBody:
    if body.support(nu) <= c + body.eps_len:
        return body
    un = unit(nu)

    def excess(theta):
        i, t = body.piece_index(theta)
        return body.pieces[i].contact(t).dot(un) - c

    def crossing(lo, hi):
        lo, hi = bisect_sign_change(excess, lo, hi)
        i_lo, _ = body.piece_index(lo)
        i_hi, _ = body.piece_index(hi)
        if i_lo != i_hi and body.has_edge_at(i_hi):
            junc = body.junctions[i_hi]
            a, b = junc.a, junc.b
            t = (c - a.dot(un)) / (b - a).dot(un)
            q = a + (b - a) * t
            theta = unwrap_from(junc.angle, lo - 1e-6)
        else:
            theta = 0.5 * (lo + hi)
            i, tt = body.piece_index(theta)
            q = body.pieces[i].contact(tt)
        q = q - un * (q.dot(un) - c)
        return theta, q

    theta1, q1 = crossing(nu - math.pi, nu)
    theta2, q2 = crossing(nu, nu + math.pi)
    theta1 = unwrap_from(theta1, nu - math.pi)
    theta2 = unwrap_from(theta2, nu)
    pieces = restrict(body, theta2, theta1 + TWO_PI)
    pieces.append(SupportPiece(Corner(q1), theta1 + TWO_PI, nu + TWO_PI))
    pieces.append(SupportPiece(Corner(q2), nu + TWO_PI, theta2 + TWO_PI))
    return make_body(pieces, _tagged("cut-of", body))
