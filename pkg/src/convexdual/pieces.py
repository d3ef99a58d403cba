"""Support pieces: the building blocks of a planar body.

A piece is a kind (a fixed contact point, or a strictly convex curve that
can evaluate its own support function) together with the closed interval of
outward normal angles on which it is active.  Curves know four things about
themselves: support value and contact point at a normal angle, and radial
value and normal angle at a position angle.  Polarity swaps these roles,
which is why :class:`PolarArc` is exact rather than sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np
from scipy.interpolate import CubicHermiteSpline, PchipInterpolator, PPoly
from scipy.optimize import brentq

from .errors import NumericNonconvergence
from .geometry import TWO_PI, Point2, canonical, unit, unwrap_from, wrap_pi

ROOT_XTOL = 1e-12
ROOT_MAXITER = 200
DEFAULT_SAMPLES = 4096


@dataclass(frozen=True)
class Corner:
    point: Point2

    def support(self, theta: float) -> float:
        return self.point.dot(unit(theta))

    def contact(self, theta: float) -> Point2:
        return self.point

    def rotated(self, alpha: float) -> Corner:
        return Corner(self.point.rotated(alpha))

    def reflected(self) -> Corner:
        return Corner(-self.point)


@dataclass(frozen=True)
class CircularArc:
    center: Point2
    radius: float

    def support(self, theta: float) -> float:
        return self.center.dot(unit(theta)) + self.radius

    def contact(self, theta: float) -> Point2:
        return self.center + unit(theta) * self.radius

    def radial(self, phi: float) -> float:
        u = unit(phi)
        b = self.center.dot(u)
        disc = b * b - self.center.dot(self.center) + self.radius * self.radius
        if disc < 0.0:
            if disc < -1e-12 * max(1.0, self.radius) ** 2:
                raise NumericNonconvergence(f"ray at angle {phi:.6g} misses circle")
            disc = 0.0
        return b + math.sqrt(disc)

    def normal_at(self, phi: float) -> float:
        y = unit(phi) * self.radial(phi)
        return (y - self.center).angle()

    def curvature_radius(self, theta: float) -> float:
        return self.radius

    def rotated(self, alpha: float) -> CircularArc:
        return CircularArc(self.center.rotated(alpha), self.radius)

    def reflected(self) -> CircularArc:
        return CircularArc(-self.center, self.radius)

    def polar(self) -> PolarArc:
        return PolarArc(self)


def support_derivative(kind, theta: float) -> float:
    """h'(theta) of an arc kind, from its contact point."""
    return kind.contact(theta).dot(unit(theta + math.pi / 2))


def _interpolant(thetas, values, derivs) -> PPoly:
    if derivs is None:
        return PchipInterpolator(thetas, values)
    return CubicHermiteSpline(thetas, values, derivs)


@dataclass(frozen=True, eq=False)
class SampledArc:
    """Support values tabulated on strictly increasing normal angles.

    With ``derivatives`` (h' at the samples) the interpolant is the cubic
    Hermite spline, which reproduces contact points at the samples exactly;
    without, it is monotone cubic (PCHIP).  ``error_estimate`` is an a
    posteriori bound: the deviation of the half-resolution interpolant at the
    dropped samples.
    """

    thetas: np.ndarray
    values: np.ndarray
    derivatives: np.ndarray | None = None
    _interp: PPoly = field(init=False, repr=False)
    _d1: PPoly = field(init=False, repr=False)
    _d2: PPoly = field(init=False, repr=False)
    _positions: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        thetas = np.asarray(self.thetas, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if thetas.ndim != 1 or thetas.shape != values.shape:
            raise ValueError("thetas and values must be 1-D arrays of equal length")
        if len(thetas) < 8:
            raise ValueError("a sampled arc needs at least 8 samples")
        if np.any(np.diff(thetas) <= 0.0):
            raise ValueError("sample angles must be strictly increasing")
        if thetas[-1] - thetas[0] > TWO_PI + 1e-12:
            raise ValueError("sample angles span more than a full turn")
        object.__setattr__(self, "thetas", thetas)
        object.__setattr__(self, "values", values)
        if self.derivatives is not None:
            derivs = np.asarray(self.derivatives, dtype=float)
            if derivs.shape != thetas.shape:
                raise ValueError("derivatives must match the sample angles")
            object.__setattr__(self, "derivatives", derivs)
        interp = _interpolant(thetas, values, self.derivatives)
        object.__setattr__(self, "_interp", interp)
        object.__setattr__(self, "_d1", interp.derivative())
        object.__setattr__(self, "_d2", interp.derivative(2))
        h, dh = values, self._d1(thetas)
        xs = h * np.cos(thetas) - dh * np.sin(thetas)
        ys = h * np.sin(thetas) + dh * np.cos(thetas)
        object.__setattr__(self, "_positions", np.unwrap(np.arctan2(ys, xs)))

    @classmethod
    def from_function(cls, fn, start: float, end: float, n: int = DEFAULT_SAMPLES, dfn=None) -> SampledArc:
        thetas = np.linspace(start, end, n)
        derivs = None if dfn is None else np.array([dfn(t) for t in thetas])
        return cls(thetas, np.array([fn(t) for t in thetas]), derivs)

    @classmethod
    def from_kind(cls, kind, start: float, end: float, n: int = DEFAULT_SAMPLES) -> SampledArc:
        """Tabulate an arc kind with exact derivatives h' = <contact, u(t + pi/2)>."""
        return cls.from_function(kind.support, start, end, n, lambda t: support_derivative(kind, t))

    def _local(self, theta: float) -> float:
        t0, t1 = float(self.thetas[0]), float(self.thetas[-1])
        t = unwrap_from(theta, t0)
        if t > t1:
            if t - TWO_PI >= t0 - 1e-9:
                return t0
            if t - t1 <= 1e-9:
                return t1
            raise ValueError(f"angle {theta:.6g} outside sampled domain [{t0:.6g}, {t1:.6g}]")
        return t

    def support(self, theta: float) -> float:
        return float(self._interp(self._local(theta)))

    def contact(self, theta: float) -> Point2:
        t = self._local(theta)
        h, dh = float(self._interp(t)), float(self._d1(t))
        return unit(t) * h + unit(t + math.pi / 2) * dh

    def curvature_radius(self, theta: float) -> float:
        t = self._local(theta)
        return float(self._interp(t) + self._d2(t))

    def normal_at(self, phi: float) -> float:
        pos = self._positions
        p = unwrap_from(phi, float(pos[0]))
        if p > pos[-1]:
            if p - TWO_PI >= pos[0] - 1e-9:
                p -= TWO_PI
            elif p - pos[-1] <= 1e-9:
                p = float(pos[-1])
            else:
                raise ValueError(f"position angle {phi:.6g} not covered by sampled arc")
        i = int(np.searchsorted(pos, p))
        if i == 0:
            return float(self.thetas[0])
        if i >= len(pos):
            return float(self.thetas[-1])
        lo, hi = float(self.thetas[i - 1]), float(self.thetas[i])

        def g(t):
            return wrap_pi(self.contact(t).angle() - p)

        glo, ghi = g(lo), g(hi)
        if glo == 0.0:
            return lo
        if ghi == 0.0:
            return hi
        if glo * ghi > 0.0:
            return lo if abs(glo) < abs(ghi) else hi
        try:
            return brentq(g, lo, hi, xtol=ROOT_XTOL * 1e-2, maxiter=ROOT_MAXITER)
        except RuntimeError as exc:  # pragma: no cover - brentq on a bracketed monotone map
            raise NumericNonconvergence(str(exc)) from exc

    def radial(self, phi: float) -> float:
        return self.contact(self.normal_at(phi)).dot(unit(phi))

    def rotated(self, alpha: float) -> SampledArc:
        return SampledArc(self.thetas + alpha, self.values.copy(), self.derivatives)

    def reflected(self) -> SampledArc:
        return SampledArc(self.thetas + math.pi, self.values.copy(), self.derivatives)

    def polar(self) -> PolarArc:
        return PolarArc(self)

    @property
    def error_estimate(self) -> float:
        d = None if self.derivatives is None else self.derivatives[::2]
        coarse = _interpolant(self.thetas[::2], self.values[::2], d)
        odd = self.thetas[1::2]
        if self.thetas[-1] != self.thetas[::2][-1]:
            odd = odd[:-1]
        if len(odd) == 0:
            return 0.0
        dev = np.max(np.abs(coarse(odd) - self._interp(odd)))
        # Hermite is fourth order, so the full-resolution error is about dev/15;
        # PCHIP degrades to second order near extrema of h, so dev itself is used.
        # Both get a safety factor and a round-off floor.
        floor = 8.0 * np.finfo(float).eps * float(np.max(np.abs(self.values)))
        scaled = float(dev) if self.derivatives is None else 2.0 * float(dev) / 15.0
        return scaled + floor


@dataclass(frozen=True)
class PolarArc:
    """The polar image of a strictly convex curve.

    Support and radial values swap reciprocally with the source, and normal
    and position angles trade places.  ``PolarArc(s).polar()`` is ``s``.
    """

    source: Union[CircularArc, SampledArc]

    def support(self, phi: float) -> float:
        return 1.0 / self.source.radial(phi)

    def contact(self, phi: float) -> Point2:
        theta = self.source.normal_at(phi)
        return unit(theta) / self.source.support(theta)

    def radial(self, psi: float) -> float:
        return 1.0 / self.source.support(psi)

    def normal_at(self, psi: float) -> float:
        return self.source.contact(psi).angle()

    def curvature_radius(self, phi: float, step: float = 1e-4) -> float:
        h = self.support
        try:
            d2 = h(phi + step) - 2.0 * h(phi) + h(phi - step)
        except ValueError:
            # at the end of a tabulated source: one-sided stencil pointing inwards
            try:
                d2 = h(phi) - 2.0 * h(phi + step) + h(phi + 2 * step)
            except ValueError:
                d2 = h(phi) - 2.0 * h(phi - step) + h(phi - 2 * step)
        return h(phi) + d2 / (step * step)

    def rotated(self, alpha: float) -> PolarArc:
        return PolarArc(self.source.rotated(alpha))

    def reflected(self) -> PolarArc:
        return PolarArc(self.source.reflected())

    def polar(self):
        return self.source


ArcKind = Union[CircularArc, SampledArc, PolarArc]
PieceKind = Union[Corner, CircularArc, SampledArc, PolarArc]


def is_arc(kind) -> bool:
    return not isinstance(kind, Corner)


@dataclass(frozen=True)
class SupportPiece:
    """A kind active on the normal-angle interval [start, end] (unwrapped)."""

    kind: PieceKind
    start: float
    end: float

    @property
    def width(self) -> float:
        return self.end - self.start

    @property
    def is_corner(self) -> bool:
        return isinstance(self.kind, Corner)

    def support(self, theta: float) -> float:
        return self.kind.support(theta)

    def contact(self, theta: float) -> Point2:
        return self.kind.contact(theta)

    def start_contact(self) -> Point2:
        return self.kind.contact(self.start)

    def end_contact(self) -> Point2:
        return self.kind.contact(self.end)

    def shifted(self, delta: float) -> SupportPiece:
        return SupportPiece(self.kind, self.start + delta, self.end + delta)

    def clipped(self, start: float, end: float) -> SupportPiece:
        return SupportPiece(self.kind, start, end)


def canonical_start(piece: SupportPiece) -> SupportPiece:
    """Shift a piece so that its start lies in [0, 2pi)."""
    return piece.shifted(canonical(piece.start) - piece.start)
