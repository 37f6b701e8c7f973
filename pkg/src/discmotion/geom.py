"""Planar primitives and the geometric predicates used by the case analysis.

Everything here is exact-formula floating point: tangency points, circle
intersections, corridor and cone membership, the domination predicate, and
the normalization frame that puts the B endpoints on the x-axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import DegenerateCircles, InvalidCone, PointInsideCircle

TWO_PI = 2.0 * math.pi


class Point(NamedTuple):
    x: float
    y: float

    def __add__(self, other):
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Point(-self.x, -self.y)

    def __mul__(self, k):
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__


class Placement(NamedTuple):
    a: Point
    b: Point


class Circle(NamedTuple):
    center: Point
    radius: float


def dot(p: Point, q: Point) -> float:
    return p.x * q.x + p.y * q.y


def cross(p: Point, q: Point) -> float:
    return p.x * q.y - p.y * q.x


def norm(p: Point) -> float:
    return math.hypot(p.x, p.y)


def dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def unit_vector(theta: float) -> Point:
    return Point(math.cos(theta), math.sin(theta))


def perp(p: Point) -> Point:
    """Rotate by +90 degrees."""
    return Point(-p.y, p.x)


def angle_of(p: Point) -> float:
    """Angle of a nonzero vector, normalized into [0, 2pi)."""
    a = math.atan2(p.y, p.x)
    return a + TWO_PI if a < 0.0 else a


def rotate(p: Point, theta: float) -> Point:
    c, s = math.cos(theta), math.sin(theta)
    return Point(c * p.x - s * p.y, s * p.x + c * p.y)


def _finite(v: float) -> bool:
    return math.isfinite(v)


@dataclass(frozen=True)
class Instance:
    """A two-disc problem: radius sum s plus start and goal placements."""

    s: float
    p0: Placement
    p1: Placement

    def __post_init__(self):
        if not (_finite(self.s) and self.s > 0.0):
            raise ValueError("s must be a positive finite real")
        for pl in (self.p0, self.p1):
            for pt in (pl.a, pl.b):
                if not (_finite(pt.x) and _finite(pt.y)):
                    raise ValueError("coordinates must be finite")
        eps = self.eps
        if dist(self.p0.a, self.p0.b) < self.s - eps:
            raise ValueError("start placement closer than the radius sum")
        if dist(self.p1.a, self.p1.b) < self.s - eps:
            raise ValueError("goal placement closer than the radius sum")

    @property
    def a0(self) -> Point:
        return self.p0.a

    @property
    def b0(self) -> Point:
        return self.p0.b

    @property
    def a1(self) -> Point:
        return self.p1.a

    @property
    def b1(self) -> Point:
        return self.p1.b

    @property
    def diameter(self) -> float:
        pts = (self.p0.a, self.p0.b, self.p1.a, self.p1.b)
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        return math.hypot(max(xs) - min(xs), max(ys) - min(ys))

    @property
    def eps(self) -> float:
        # relative predicate tolerance; see the geometry design notes
        return 1e-9 * max(self.diameter, self.s)


@dataclass(frozen=True)
class Frame:
    """Rigid (or reflected-rigid) map from working coordinates back to the
    caller's coordinates: reflect across x if flagged, rotate, translate."""

    rotation: float
    translation: Point
    reflected: bool = False

    def apply(self, p: Point) -> Point:
        q = Point(p.x, -p.y) if self.reflected else p
        return rotate(q, self.rotation) + self.translation

    def unapply(self, p: Point) -> Point:
        q = rotate(p - self.translation, -self.rotation)
        return Point(q.x, -q.y) if self.reflected else q

    def apply_angle(self, theta: float) -> float:
        t = -theta if self.reflected else theta
        return (t + self.rotation) % TWO_PI

    @property
    def flips_orientation(self) -> bool:
        return self.reflected


def distance_point_segment(p: Point, q0: Point, q1: Point) -> float:
    """Euclidean distance from p to the closed segment q0q1."""
    d = q1 - q0
    dd = dot(d, d)
    if dd == 0.0:
        return dist(p, q0)
    t = dot(p - q0, d) / dd
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    return dist(p, q0 + d * t)


def in_s_corridor(p: Point, q0: Point, q1: Point, s: float,
                  eps: float = 0.0) -> bool:
    """Open corridor: strictly closer than s to the segment q0q1."""
    return distance_point_segment(p, q0, q1) < s - eps


def in_s_cone(p: Point, apex: Point, target: Point, s: float,
              eps: float = 0.0) -> bool:
    """Closed cone of half-lines from apex meeting the circle (target, s)."""
    d = dist(apex, target)
    if d < s - eps:
        raise InvalidCone(f"apex is {d} from target, closer than s={s}")
    v = p - apex
    vn = norm(v)
    if vn == 0.0:
        return True
    half = math.asin(min(1.0, s / d))
    cosang = dot(v, target - apex) / (vn * d)
    cosang = max(-1.0, min(1.0, cosang))
    return math.acos(cosang) <= half + 1e-12


def tangent_points(p: Point, c: Circle, eps: float = 0.0):
    """Tangency points on c of lines through p, ordered (upper, lower).

    "Upper" is fixed by sign of cross(center - p, t - p) < 0 in the working
    frame.  A boundary point returns itself as the single tangency.
    """
    v = p - c.center
    d = norm(v)
    tol = max(eps, 1e-12 * c.radius)
    if d < c.radius - tol:
        raise PointInsideCircle(
            f"point at distance {d} inside circle of radius {c.radius}")
    if abs(d - c.radius) <= tol:
        return (p,)
    psi = angle_of(v)
    delta = math.acos(min(1.0, c.radius / d))
    hi = c.center + c.radius * unit_vector(psi + delta)
    lo = c.center + c.radius * unit_vector(psi - delta)
    return (hi, lo)


def upper_tangency(p: Point, c: Circle, eps: float = 0.0) -> Point:
    """Tangency point of maximal y (ties broken by maximal x)."""
    pts = tangent_points(p, c, eps)
    return max(pts, key=lambda t: (t.y, t.x))


def circle_circle_intersection(c1: Circle, c2: Circle, eps: float = 0.0):
    """Intersection points ordered (upper, lower) by y."""
    v = c2.center - c1.center
    d = norm(v)
    scale = max(c1.radius, c2.radius, d)
    tol = max(eps, 1e-12 * scale)
    if d <= tol:
        if abs(c1.radius - c2.radius) <= tol:
            raise DegenerateCircles("coincident circles")
        return ()
    a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d)
    h2 = c1.radius * c1.radius - a * a
    if h2 < -tol * scale:
        return ()
    h = math.sqrt(max(0.0, h2))
    u = v * (1.0 / d)
    m = c1.center + u * a
    if h <= tol:
        return (m,)
    off = perp(u) * h
    pts = (m + off, m - off)
    return tuple(sorted(pts, key=lambda q: (q.y, q.x), reverse=True))


def line_circle_intersections(p0: Point, direction: Point, c: Circle):
    """Parameters and points where p0 + t*direction meets the circle."""
    f = p0 - c.center
    a = dot(direction, direction)
    if a == 0.0:
        return []
    b = 2.0 * dot(f, direction)
    cq = dot(f, f) - c.radius * c.radius
    disc = b * b - 4.0 * a * cq
    if disc < 0.0:
        return []
    root = math.sqrt(disc)
    out = []
    for t in sorted(((-b - root) / (2.0 * a), (-b + root) / (2.0 * a))):
        out.append((t, p0 + direction * t))
    return out


def line_line_intersection(p0: Point, d0: Point, p1: Point,
                           d1: Point) -> Optional[Point]:
    """Intersection of two parametric lines, or None when parallel."""
    denom = cross(d0, d1)
    scale = max(norm(d0) * norm(d1), 1e-300)
    if abs(denom) <= 1e-12 * scale:
        return None
    t = cross(p1 - p0, d1) / denom
    return p0 + d0 * t


def _tangent_line_has_on_center_side(p: Point, tangency: Point, c: Circle,
                                     q: Point, eps: float) -> bool:
    if tangency == p:
        direction = perp(p - c.center)
    else:
        direction = tangency - p
    dn = norm(direction)
    side_c = cross(direction, c.center - p)
    side_q = cross(direction, q - p)
    sign = 1.0 if side_c >= 0.0 else -1.0
    return sign * side_q >= -eps * dn


def dominates(p: Point, q: Point, b0: Point, b1: Point, s: float,
              eps: float = 0.0) -> bool:
    """True iff q lies on or below both upper tangent lines from p to the
    two separation circles, "below" meaning the closed side containing the
    tangent circle's centre (in the frame where b0, b1 sit on the x-axis)."""
    axis = b1 - b0
    rot = angle_of(axis) if norm(axis) > 0.0 else 0.0
    frame = Frame(rotation=rot, translation=b0)
    pn, qn = frame.unapply(p), frame.unapply(q)
    d = dist(b0, b1)
    for center in (Point(0.0, 0.0), Point(d, 0.0)):
        circ = Circle(center, s)
        t = upper_tangency(pn, circ, eps)
        if not _tangent_line_has_on_center_side(pn, t, circ, qn, eps):
            return False
    return True


def normalize(inst: Instance):
    """Rigid frame sending the instance to B0=(0,0), B1=(d,0), d >= 0.

    Returns (frame, normalized); frame.apply maps normalized coordinates
    back to the original ones.  If B0=B1 the axis is taken from A1-A0, and
    if that also degenerates the identity rotation is used.
    """
    axis = inst.b1 - inst.b0
    if norm(axis) > 0.0:
        rot = angle_of(axis)
    else:
        alt = inst.p1.a - inst.p0.a
        rot = angle_of(alt) if norm(alt) > 0.0 else 0.0
    frame = Frame(rotation=rot, translation=inst.b0)
    a0 = frame.unapply(inst.a0)
    a1 = frame.unapply(inst.a1)
    b1 = Point(dist(inst.b0, inst.b1), 0.0)  # exact by construction
    ninst = Instance(inst.s, Placement(a0, Point(0.0, 0.0)),
                     Placement(a1, b1))
    return frame, ninst


def reflect_point(p: Point) -> Point:
    return Point(p.x, -p.y)


def reflect_instance(inst: Instance) -> Instance:
    """Mirror all coordinates across the x-axis."""
    return Instance(
        inst.s,
        Placement(reflect_point(inst.p0.a), reflect_point(inst.p0.b)),
        Placement(reflect_point(inst.p1.a), reflect_point(inst.p1.b)),
    )
