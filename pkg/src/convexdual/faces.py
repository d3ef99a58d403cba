"""Faces and cones of a planar body, with their inclusion orders.

Faces are the empty set, a boundary point, a boundary segment, or the whole
body.  Cones are the origin, a closed ray, a salient closed sector, or the
full plane.  Comparisons take an explicit length/angle tolerance because
the coordinates come out of floating-point constructions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .geometry import EPS_ANG, TWO_PI, Point2, angles_equal, canonical, in_cyclic_interval


class FaceKind(Enum):
    EMPTY = "empty"
    POINT = "point"
    SEGMENT = "segment"
    WHOLE = "whole"


class ConeKind(Enum):
    ORIGIN = "origin"
    RAY = "ray"
    SECTOR = "sector"
    FULL_PLANE = "full_plane"


_FACE_RANK = {FaceKind.EMPTY: 0, FaceKind.POINT: 1, FaceKind.SEGMENT: 2, FaceKind.WHOLE: 3}
_CONE_RANK = {ConeKind.ORIGIN: 0, ConeKind.RAY: 1, ConeKind.SECTOR: 2, ConeKind.FULL_PLANE: 3}


@dataclass(frozen=True)
class Face:
    kind: FaceKind
    a: Point2 | None = None
    b: Point2 | None = None

    @classmethod
    def empty(cls) -> Face:
        return cls(FaceKind.EMPTY)

    @classmethod
    def whole(cls) -> Face:
        return cls(FaceKind.WHOLE)

    @classmethod
    def point(cls, p: Point2) -> Face:
        return cls(FaceKind.POINT, p)

    @classmethod
    def segment(cls, a: Point2, b: Point2) -> Face:
        return cls(FaceKind.SEGMENT, a, b)

    @property
    def rank(self) -> int:
        return _FACE_RANK[self.kind]

    @property
    def is_point(self) -> bool:
        return self.kind is FaceKind.POINT

    @property
    def is_segment(self) -> bool:
        return self.kind is FaceKind.SEGMENT

    def extreme_points(self) -> list[Point2]:
        if self.kind is FaceKind.POINT:
            return [self.a]
        if self.kind is FaceKind.SEGMENT:
            return [self.a, self.b]
        return []

    def midpoint(self) -> Point2:
        if self.kind is FaceKind.POINT:
            return self.a
        if self.kind is FaceKind.SEGMENT:
            return (self.a + self.b) * 0.5
        raise ValueError(f"{self.kind.value} face has no midpoint")

    def __str__(self) -> str:
        if self.kind is FaceKind.POINT:
            return f"point({self.a.x:.9g},{self.a.y:.9g})"
        if self.kind is FaceKind.SEGMENT:
            return f"segment({self.a.x:.9g},{self.a.y:.9g};{self.b.x:.9g},{self.b.y:.9g})"
        return self.kind.value


@dataclass(frozen=True)
class Cone:
    kind: ConeKind
    start: float = 0.0
    end: float = 0.0

    @classmethod
    def origin(cls) -> Cone:
        return cls(ConeKind.ORIGIN)

    @classmethod
    def full(cls) -> Cone:
        return cls(ConeKind.FULL_PLANE)

    @classmethod
    def ray(cls, theta: float) -> Cone:
        t = canonical(theta)
        return cls(ConeKind.RAY, t, t)

    @classmethod
    def sector(cls, start: float, end: float) -> Cone:
        width = end - start
        if not 0.0 < width < math.pi:
            raise ValueError(f"sector width {width:.6g} not in (0, pi)")
        s = canonical(start)
        return cls(ConeKind.SECTOR, s, s + width)

    @property
    def rank(self) -> int:
        return _CONE_RANK[self.kind]

    @property
    def width(self) -> float:
        return self.end - self.start

    @property
    def midline(self) -> float:
        return canonical(0.5 * (self.start + self.end))

    def boundary_rays(self) -> list[Cone]:
        if self.kind is ConeKind.SECTOR:
            return [Cone.ray(self.start), Cone.ray(self.end)]
        return []

    def contains_direction(self, theta: float, tol: float = EPS_ANG) -> bool:
        if self.kind is ConeKind.FULL_PLANE:
            return True
        if self.kind is ConeKind.ORIGIN:
            return False
        return in_cyclic_interval(theta, self.start, self.end, tol)

    def __str__(self) -> str:
        if self.kind is ConeKind.RAY:
            return f"ray({self.start:.9g})"
        if self.kind is ConeKind.SECTOR:
            return f"sector({self.start:.9g},{self.end:.9g})"
        return self.kind.value


def point_on_segment(p: Point2, a: Point2, b: Point2, tol: float) -> bool:
    ab = b - a
    L2 = ab.dot(ab)
    if L2 == 0.0:
        return p.close_to(a, tol)
    t = (p - a).dot(ab) / L2
    if t < -tol / math.sqrt(L2) or t > 1.0 + tol / math.sqrt(L2):
        return False
    return p.close_to(a + ab * min(max(t, 0.0), 1.0), tol)


def face_eq(f: Face, g: Face, tol: float) -> bool:
    if f.kind is not g.kind:
        return False
    if f.kind is FaceKind.POINT:
        return f.a.close_to(g.a, tol)
    if f.kind is FaceKind.SEGMENT:
        return (f.a.close_to(g.a, tol) and f.b.close_to(g.b, tol)) or (
            f.a.close_to(g.b, tol) and f.b.close_to(g.a, tol)
        )
    return True


def face_leq(f: Face, g: Face, tol: float) -> bool:
    """Set inclusion ``f`` within ``g`` for faces of one body."""
    if f.kind is FaceKind.EMPTY or g.kind is FaceKind.WHOLE:
        return True
    if g.kind is FaceKind.EMPTY or f.kind is FaceKind.WHOLE:
        return False
    if g.kind is FaceKind.POINT:
        return f.kind is FaceKind.POINT and f.a.close_to(g.a, tol)
    # g is a segment
    return all(point_on_segment(p, g.a, g.b, tol) for p in f.extreme_points())


def face_intersection(f: Face, g: Face, tol: float) -> Face:
    if face_leq(f, g, tol):
        return f
    if face_leq(g, f, tol):
        return g
    if f.kind is FaceKind.SEGMENT and g.kind is FaceKind.SEGMENT:
        for p in f.extreme_points():
            if any(p.close_to(q, tol) for q in g.extreme_points()):
                return Face.point(p)
        for p in f.extreme_points():
            if point_on_segment(p, g.a, g.b, tol):
                return Face.point(p)
        for p in g.extreme_points():
            if point_on_segment(p, f.a, f.b, tol):
                return Face.point(p)
    return Face.empty()


def cone_eq(t: Cone, u: Cone, tol: float = EPS_ANG) -> bool:
    if t.kind is not u.kind:
        return False
    if t.kind in (ConeKind.RAY, ConeKind.SECTOR):
        return angles_equal(t.start, u.start, tol) and angles_equal(t.end, u.end, tol)
    return True


def cone_leq(t: Cone, u: Cone, tol: float = EPS_ANG) -> bool:
    if t.kind is ConeKind.ORIGIN or u.kind is ConeKind.FULL_PLANE:
        return True
    if u.kind is ConeKind.ORIGIN or t.kind is ConeKind.FULL_PLANE:
        return False
    if u.kind is ConeKind.RAY:
        return t.kind is ConeKind.RAY and angles_equal(t.start, u.start, tol)
    return u.contains_direction(t.start, tol) and u.contains_direction(t.end, tol) and (
        t.kind is ConeKind.RAY or t.width <= u.width + tol
    )


def cone_intersection(t: Cone, u: Cone, tol: float = EPS_ANG) -> Cone:
    """Geometric intersection of two cones, each salient or trivial."""
    if cone_leq(t, u, tol):
        return t
    if cone_leq(u, t, tol):
        return u
    if t.kind is ConeKind.SECTOR and u.kind is ConeKind.SECTOR:
        # overlap of two arcs shorter than pi is a single arc or empty
        lo_candidates = [a for a in (t.start, u.start) if t.contains_direction(a, tol) and u.contains_direction(a, tol)]
        hi_candidates = [b for b in (t.end, u.end) if t.contains_direction(b, tol) and u.contains_direction(b, tol)]
        if lo_candidates and hi_candidates:
            lo = lo_candidates[0]
            best = None
            for hi in hi_candidates:
                w = canonical(hi - lo)
                if w > TWO_PI - tol:
                    w = 0.0
                if best is None or w < best[1]:
                    best = (hi, w)
            hi, w = best
            if w <= tol:
                return Cone.ray(lo)
            return Cone.sector(lo, lo + w)
    return Cone.origin()


def cone_intersect_all(cones: list[Cone], tol: float = EPS_ANG) -> Cone:
    """Intersection of a non-empty list of cones."""
    out = cones[0]
    for c in cones[1:]:
        out = cone_intersection(out, c, tol)
    return out
