"""Independent reference computations for the tests.

Nothing here imports the package: bodies are dense polygons built straight
from their geometric descriptions, classified by turning angles and edge
lengths, and polarized through the facet equations of a convex hull.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.spatial import ConvexHull

N_ARC = 2048


def circle_points(center, radius, start, end, n=N_ARC):
    t = np.linspace(start, end, n)
    return np.column_stack([center[0] + radius * np.cos(t), center[1] + radius * np.sin(t)])


def hull_vertices(points) -> np.ndarray:
    """Counterclockwise convex hull vertices of a point cloud."""
    pts = np.asarray(points, dtype=float)
    hull = ConvexHull(pts)
    return pts[hull.vertices]


def polar_vertices(vertices) -> np.ndarray:
    """Vertices of the polar polygon: one per facet line <n, x> = c, at n / c."""
    hull = ConvexHull(np.asarray(vertices, dtype=float))
    out = []
    for nx, ny, off in hull.equations:
        out.append((nx / -off, ny / -off))
    return hull_vertices(out)


def support(vertices, theta) -> float:
    v = np.asarray(vertices)
    return float(np.max(v[:, 0] * math.cos(theta) + v[:, 1] * math.sin(theta)))


def radial(vertices, phi) -> float:
    """Largest r with r u(phi) in the polygon, via the facet equations."""
    hull = ConvexHull(np.asarray(vertices, dtype=float))
    u = np.array([math.cos(phi), math.sin(phi)])
    best = math.inf
    for nx, ny, off in hull.equations:
        d = nx * u[0] + ny * u[1]
        if d > 1e-15:
            best = min(best, -off / d)
    return best


def census_from_polygon(vertices, edge_min=0.02, corner_turn=0.05) -> tuple[int, int, int, int, int]:
    """(n, p, m, f, s) of a dense polygonal approximation.

    Sides longer than ``edge_min`` (arc sampling is far finer for unit-scale
    shapes) are segments of the body; vertices turning sharply are
    corners, typed by how many long sides they touch; smooth endpoints of
    long sides are non-exposed points.
    """
    v = np.asarray(vertices, dtype=float)
    k = len(v)
    sides = np.roll(v, -1, axis=0) - v
    lengths = np.hypot(sides[:, 0], sides[:, 1])
    long_side = lengths > edge_min
    headings = np.arctan2(sides[:, 1], sides[:, 0])
    n = p = m = f = 0
    for i in range(k):
        turn = (headings[i] - headings[i - 1]) % (2 * math.pi)
        touching = int(long_side[i - 1]) + int(long_side[i])
        if turn > corner_turn:
            if touching == 2:
                p += 1
            elif touching == 1:
                m += 1
            else:
                f += 1
        else:
            n += touching
    return n, p, m, f, int(np.sum(long_side))


def long_sides(vertices, edge_min=0.02) -> list[tuple[np.ndarray, np.ndarray]]:
    v = np.asarray(vertices, dtype=float)
    sides = np.roll(v, -1, axis=0) - v
    lengths = np.hypot(sides[:, 0], sides[:, 1])
    keep = lengths > edge_min
    return [(v[i], v[(i + 1) % len(v)]) for i in np.nonzero(keep)[0]]


# ---------------------------------------------------------------- named shapes


def example2_polygon(a=0.5, b=0.5, n=N_ARC):
    pts = np.vstack([
        circle_points((0.0, 0.0), a + b, 0.0, math.pi, n),
        circle_points((-a, 0.0), b, math.pi, 1.5 * math.pi, n // 2),
        circle_points((a, 0.0), b, 1.5 * math.pi, 2 * math.pi, n // 2),
    ])
    return hull_vertices(pts)


def fig1c_polygon(n=N_ARC):
    return hull_vertices(np.vstack([circle_points((0, 0), 1.0, 0, 2 * math.pi, 2 * n), [[0.0, 2.0]]]))


def fig1d_polygon(n=N_ARC):
    c = circle_points((0, 0), 1.0, 0, 2 * math.pi, 2 * n)
    c = c[c[:, 1] >= -0.5]
    chord = np.array([[-math.sqrt(3) / 2, -0.5], [math.sqrt(3) / 2, -0.5]])
    return hull_vertices(np.vstack([c, chord]))


def example2_dual_radial(alpha, a=0.5, b=0.5) -> float:
    """Closed-form radial function of the dual of the example-2 body."""
    alpha = alpha % (2 * math.pi)
    if alpha < math.pi / 2:
        return 1.0 / (a * math.cos(alpha) + b)
    if alpha < math.pi:
        return 1.0 / (-a * math.cos(alpha) + b)
    return 1.0 / (a + b)


def tangency_points(p, radius=1.0):
    """Points where the two tangent lines from p touch the centred circle."""
    d = math.hypot(*p)
    base = math.atan2(p[1], p[0])
    w = math.acos(radius / d)
    return [(radius * math.cos(base + s * w), radius * math.sin(base + s * w)) for s in (-1, 1)]


def regular_polygon_vertices(k, r, phase=math.pi):
    return np.array([[r * math.cos(phase + 2 * math.pi * j / k), r * math.sin(phase + 2 * math.pi * j / k)] for j in range(k)])


def selfdual_deviation_polygon(vertices, samples=2048) -> float:
    """sup |h_K - h_{K*}| / max h_K for a polygon, with K* = -polar."""
    dual = -polar_vertices(vertices)
    th = np.linspace(0, 2 * math.pi, samples, endpoint=False)
    h = np.array([support(vertices, t) for t in th])
    hd = np.array([support(dual, t) for t in th])
    return float(np.max(np.abs(h - hd)) / np.max(h))
