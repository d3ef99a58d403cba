"""Planar points and angle arithmetic on the circle of directions."""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

EPS_ANG = 1e-9
EPS_INT = 1e-9
EPS_CURV = 1e-9
EPS_LEN_REL = 1e-9


@dataclass(frozen=True, slots=True)
class Point2:
    x: float
    y: float

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> Point2:
        return Point2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Point2:
        return Point2(self.x / s, self.y / s)

    def __neg__(self) -> Point2:
        return Point2(-self.x, -self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, other: Point2) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point2) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def angle(self) -> float:
        """Position angle in [0, 2pi)."""
        return canonical(math.atan2(self.y, self.x))

    def rotated(self, alpha: float) -> Point2:
        c, s = math.cos(alpha), math.sin(alpha)
        return Point2(c * self.x - s * self.y, s * self.x + c * self.y)

    def dist(self, other: Point2) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def close_to(self, other: Point2, tol: float) -> bool:
        return self.dist(other) <= tol


ORIGIN_POINT = Point2(0.0, 0.0)


def unit(theta: float) -> Point2:
    """The unit vector (cos theta, sin theta)."""
    return Point2(math.cos(theta), math.sin(theta))


def canonical(theta: float) -> float:
    """Reduce an angle to [0, 2pi)."""
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:
        t = 0.0
    return t


def wrap_pi(theta: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    t = canonical(theta)
    return t - TWO_PI if t > math.pi else t


def unwrap_from(theta: float, start: float) -> float:
    """The representative of ``theta`` in [start, start + 2pi)."""
    return start + canonical(theta - start)


def angles_equal(a: float, b: float, tol: float = EPS_ANG) -> bool:
    return abs(wrap_pi(a - b)) <= tol


def in_cyclic_interval(theta: float, start: float, end: float, tol: float = EPS_ANG) -> bool:
    """Closed membership of ``theta`` in the counterclockwise arc [start, end]."""
    width = end - start
    if width >= TWO_PI - tol:
        return True
    d = canonical(theta - start)
    return d <= width + tol or d >= TWO_PI - tol


def strictly_inside(theta: float, start: float, end: float, tol: float = EPS_ANG) -> bool:
    """Open membership in the counterclockwise arc (start, end)."""
    d = canonical(theta - start)
    return tol < d < (end - start) - tol
