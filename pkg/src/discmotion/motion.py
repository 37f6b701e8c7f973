"""Trajectories, decoupled and coupled schedules, and motion queries.

A motion is a pair of per-robot trajectories plus a schedule.  Decoupled
schedules move one robot per phase; coupled schedules advance both along
their trajectories simultaneously, and are produced by couple(), which
straightens every reversal window of the placement-angle profile.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from .errors import CouplingFailure
from .geom import (TWO_PI, Frame, Placement, Point, angle_of, cross, dist,
                   dot, norm, perp, reflect_point, unit_vector)
from .support import placement_angle


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    kind = "segment"

    @cached_property
    def length(self) -> float:
        return dist(self.start, self.end)

    def point_at(self, u: float) -> Point:
        return self.start + (self.end - self.start) * u

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)


def _ccw_sweep(start_angle: float, end_angle: float) -> float:
    s = (end_angle - start_angle) % TWO_PI
    # a numerically-full circle is a degenerate zero arc, never a loop
    if s > TWO_PI - 1e-9:
        return 0.0
    return s


@dataclass(frozen=True)
class Arc:
    center: Point
    radius: float
    start_angle: float
    end_angle: float
    direction: str  # "ccw" | "cw"

    kind = "arc"

    @cached_property
    def sweep(self) -> float:
        if self.direction == "ccw":
            return _ccw_sweep(self.start_angle, self.end_angle)
        return _ccw_sweep(self.end_angle, self.start_angle)

    @cached_property
    def length(self) -> float:
        return self.radius * self.sweep

    def angle_at(self, u: float) -> float:
        if self.direction == "ccw":
            return self.start_angle + self.sweep * u
        return self.start_angle - self.sweep * u

    def point_at(self, u: float) -> Point:
        return self.center + self.radius * unit_vector(self.angle_at(u))

    @property
    def start(self) -> Point:
        return self.point_at(0.0)

    @property
    def end(self) -> Point:
        return self.point_at(1.0)

    def reversed(self) -> "Arc":
        flip = "cw" if self.direction == "ccw" else "ccw"
        return Arc(self.center, self.radius, self.end_angle,
                   self.start_angle, flip)


Primitive = Union[Segment, Arc]


def primitive_length(p: Primitive) -> float:
    return p.length


@dataclass(frozen=True)
class Trajectory:
    primitives: tuple

    def __post_init__(self):
        prev = None
        for p in self.primitives:
            if prev is not None:
                gap = dist(prev, p.start)
                scale = 1.0 + max(abs(prev.x), abs(prev.y))
                if gap > 1e-9 * scale:
                    raise ValueError(f"discontinuous trajectory (gap {gap})")
            prev = p.end

    @cached_property
    def cumulative(self) -> tuple:
        acc, out = 0.0, [0.0]
        for p in self.primitives:
            acc += p.length
            out.append(acc)
        return tuple(out)

    @property
    def length(self) -> float:
        return self.cumulative[-1]

    def point_at(self, arclen: float) -> Point:
        cum = self.cumulative
        if not self.primitives:
            raise ValueError("empty trajectory has no points")
        s = min(max(arclen, 0.0), cum[-1])
        i = bisect.bisect_right(cum, s) - 1
        i = min(i, len(self.primitives) - 1)
        p = self.primitives[i]
        span = cum[i + 1] - cum[i]
        u = (s - cum[i]) / span if span > 0.0 else 0.0
        return p.point_at(u)

    def slice(self, lo: float, hi: float):
        """Primitives covering the arc-length range [lo, hi], with partial
        pieces cut exactly; zero-length slivers are dropped."""
        cum = self.cumulative
        out = []
        tol = 1e-12 * (1.0 + cum[-1])
        for i, p in enumerate(self.primitives):
            a, b = cum[i], cum[i + 1]
            s0, s1 = max(a, lo), min(b, hi)
            if s1 - s0 <= tol:
                continue
            if s1 - s0 >= (b - a) - tol:
                out.append(p)
                continue
            u0 = (s0 - a) / (b - a)
            u1 = (s1 - a) / (b - a)
            if isinstance(p, Segment):
                out.append(Segment(p.point_at(u0), p.point_at(u1)))
            else:
                out.append(Arc(p.center, p.radius, p.angle_at(u0) % TWO_PI,
                               p.angle_at(u1) % TWO_PI, p.direction))
        return out


EMPTY_TRAJECTORY = Trajectory(())


class Phase(NamedTuple):
    robot: str  # "A" | "B"
    start: int  # first primitive index in that robot's trajectory
    stop: int   # one past the last


class JointItem(NamedTuple):
    a_lo: float
    a_hi: float
    b_lo: float
    b_hi: float

    @property
    def duration(self) -> float:
        return (self.a_hi - self.a_lo) + (self.b_hi - self.b_lo)


@dataclass(frozen=True)
class Motion:
    traj_a: Trajectory
    traj_b: Trajectory
    schedule: tuple  # of Phase (decoupled) or JointItem (coupled)
    orientation: str  # "ccw" | "cw" | "straight"
    start: Placement
    end: Placement

    @property
    def is_coupled(self) -> bool:
        return bool(self.schedule) and isinstance(self.schedule[0], JointItem)

    @property
    def length(self) -> float:
        return self.traj_a.length + self.traj_b.length


def motion_length(m: Motion) -> float:
    return m.length


def _phase_windows(m: Motion):
    """Decoupled phase spans: (s_lo, s_hi, robot, robot_arclen_lo)."""
    out = []
    s = 0.0
    consumed = {"A": 0.0, "B": 0.0}
    for ph in m.schedule:
        traj = m.traj_a if ph.robot == "A" else m.traj_b
        cum = traj.cumulative
        span = cum[ph.stop] - cum[ph.start]
        out.append((s, s + span, ph.robot, consumed[ph.robot]))
        consumed[ph.robot] += span
        s += span
    return out


def _item_windows(m: Motion):
    out = []
    s = 0.0
    for it in m.schedule:
        out.append((s, s + it.duration, it))
        s += it.duration
    return out


def _positions_at(m: Motion, s: float) -> Placement:
    if not m.schedule:
        return m.start
    if m.is_coupled:
        for lo, hi, it in _item_windows(m):
            if s <= hi or it is m.schedule[-1]:
                f = (s - lo) / (hi - lo) if hi > lo else 1.0
                f = min(max(f, 0.0), 1.0)
                a = m.traj_a.point_at(it.a_lo + f * (it.a_hi - it.a_lo)) \
                    if m.traj_a.primitives else m.start.a
                b = m.traj_b.point_at(it.b_lo + f * (it.b_hi - it.b_lo)) \
                    if m.traj_b.primitives else m.start.b
                return Placement(a, b)
    a_len, b_len = 0.0, 0.0
    for lo, hi, robot, base in _phase_windows(m):
        if s >= hi:
            if robot == "A":
                a_len = base + (hi - lo)
            else:
                b_len = base + (hi - lo)
            continue
        if robot == "A":
            a_len = base + (s - lo)
        else:
            b_len = base + (s - lo)
        break
    a = m.traj_a.point_at(a_len) if m.traj_a.primitives else m.start.a
    b = m.traj_b.point_at(b_len) if m.traj_b.primitives else m.start.b
    return Placement(a, b)


def sample(m: Motion, t: float) -> Placement:
    """Placement at normalized arc-length parameter t in [0, 1]."""
    if t <= 0.0:
        return m.start
    if t >= 1.0:
        return m.end
    total = m.length
    if total == 0.0:
        return m.start
    return _positions_at(m, t * total)


def _point_to_primitive_min(p: Point, prim: Primitive) -> float:
    if isinstance(prim, Segment):
        d = prim.end - prim.start
        dd = dot(d, d)
        if dd == 0.0:
            return dist(p, prim.start)
        u = dot(p - prim.start, d) / dd
        u = min(max(u, 0.0), 1.0)
        return dist(p, prim.point_at(u))
    v = p - prim.center
    dc = norm(v)
    best = min(dist(p, prim.start), dist(p, prim.end))
    if dc > 0.0 and prim.sweep > 0.0:
        ang = angle_of(v)
        if prim.direction == "ccw":
            rel = (ang - prim.start_angle) % TWO_PI
        else:
            rel = (prim.start_angle - ang) % TWO_PI
        if rel <= prim.sweep:
            best = min(best, abs(dc - prim.radius))
    return best


def min_separation(m: Motion) -> float:
    """Exact minimum centre separation over the motion."""
    best = min(dist(m.start.a, m.start.b), dist(m.end.a, m.end.b))
    if not m.schedule:
        return best
    if not m.is_coupled:
        for lo, hi, robot, base in _phase_windows(m):
            here = _positions_at(m, lo)
            static = here.b if robot == "A" else here.a
            traj = m.traj_a if robot == "A" else m.traj_b
            for prim in traj.slice(base, base + (hi - lo)):
                best = min(best, _point_to_primitive_min(static, prim))
        return best
    for lo, hi, it in _item_windows(m):
        p_lo = _positions_at(m, lo)
        p_hi = _positions_at(m, hi)
        a_span = it.a_hi - it.a_lo
        b_span = it.b_hi - it.b_lo
        if a_span > 0.0 and b_span > 0.0:
            # straight joint item: minimum at an endpoint for parallel
            # same-direction relative vectors
            best = min(best, dist(p_lo.a, p_lo.b), dist(p_hi.a, p_hi.b))
            continue
        if a_span > 0.0:
            static, traj, rng = p_lo.b, m.traj_a, (it.a_lo, it.a_hi)
        elif b_span > 0.0:
            static, traj, rng = p_lo.a, m.traj_b, (it.b_lo, it.b_hi)
        else:
            continue
        for prim in traj.slice(*rng):
            best = min(best, _point_to_primitive_min(static, prim))
    return best


def min_separation_sampled(m: Motion, n: int = 4096) -> float:
    best = math.inf
    for i in range(n + 1):
        pl = sample(m, i / n)
        best = min(best, dist(pl.a, pl.b))
    return best


def _signed_angle(u: Point, v: Point) -> float:
    return math.atan2(cross(u, v), dot(u, v))


def _edge_list(tr: Trajectory, chord_start: Point, chord_end: Point):
    """Directed edges of the closed curve trace + chord, with internal
    turning for arcs."""
    scale = 1.0 + max((norm(p.end - p.start) for p in tr.primitives),
                      default=0.0)
    edges = []
    for p in tr.primitives:
        if isinstance(p, Segment):
            d = p.end - p.start
            if norm(d) > 1e-12 * scale:
                edges.append((d, d, 0.0))
        else:
            if p.sweep <= 1e-12:
                continue
            sgn = 1.0 if p.direction == "ccw" else -1.0
            din = perp(unit_vector(p.start_angle)) * sgn
            dout = perp(unit_vector(p.end_angle)) * sgn
            edges.append((din, dout, sgn * p.sweep))
    chord = chord_start - chord_end
    if norm(chord) > 1e-9 * scale:
        edges.append((chord, chord, 0.0))
    return edges


def is_trace_convex(tr: Trajectory, chord_start: Point,
                    chord_end: Point) -> bool:
    """Whether trace plus closing chord bounds a convex region: one-signed
    turning, total +-2pi (degenerate single-edge cases count as convex)."""
    edges = _edge_list(tr, chord_start, chord_end)
    if len(edges) <= 1:
        return True
    turns = [e[2] for e in edges if e[2] != 0.0]
    flips = []
    for i, (_, dout, _t) in enumerate(edges):
        din_next = edges[(i + 1) % len(edges)][0]
        ang = _signed_angle(dout, din_next)
        if abs(abs(ang) - math.pi) <= 1e-9:
            flips.append(ang)  # sign resolved by the majority below
        elif abs(ang) > 1e-9:
            turns.append(ang)
    majority = 1.0 if sum(turns) >= 0.0 else -1.0
    turns += [majority * math.pi for _ in flips]
    if not turns:
        return True
    sgn = 1.0 if turns[0] > 0.0 else -1.0
    if any(t * sgn < -1e-9 for t in turns):
        return False
    return abs(abs(sum(turns)) - TWO_PI) <= 1e-6


def _arclen_maps(m: Motion, s_values: np.ndarray):
    """A- and B-trajectory arc lengths consumed at each motion arc length."""
    if m.is_coupled:
        bounds, a_lo, a_hi, b_lo, b_hi = [0.0], [], [], [], []
        for lo, hi, it in _item_windows(m):
            bounds.append(hi)
            a_lo.append(it.a_lo)
            a_hi.append(it.a_hi)
            b_lo.append(it.b_lo)
            b_hi.append(it.b_hi)
        bounds = np.asarray(bounds)
        idx = np.clip(np.searchsorted(bounds, s_values, side="right") - 1,
                      0, len(m.schedule) - 1)
        width = bounds[idx + 1] - bounds[idx]
        f = np.where(width > 0.0, (s_values - bounds[idx]) / np.where(
            width > 0.0, width, 1.0), 1.0)
        f = np.clip(f, 0.0, 1.0)
        a_lo, a_hi = np.asarray(a_lo), np.asarray(a_hi)
        b_lo, b_hi = np.asarray(b_lo), np.asarray(b_hi)
        return (a_lo[idx] + f * (a_hi[idx] - a_lo[idx]),
                b_lo[idx] + f * (b_hi[idx] - b_lo[idx]))
    a_out = np.zeros_like(s_values)
    b_out = np.zeros_like(s_values)
    for lo, hi, robot, base in _phase_windows(m):
        span = hi - lo
        adv = np.clip(s_values - lo, 0.0, span)
        if robot == "A":
            a_out += adv
        else:
            b_out += adv
    return a_out, b_out


def _points_on_trajectory(tr: Trajectory, arclens: np.ndarray, fallback: Point):
    if not tr.primitives:
        return (np.full_like(arclens, fallback.x),
                np.full_like(arclens, fallback.y))
    cum = np.asarray(tr.cumulative)
    s = np.clip(arclens, 0.0, cum[-1])
    idx = np.clip(np.searchsorted(cum, s, side="right") - 1, 0,
                  len(tr.primitives) - 1)
    xs = np.empty_like(s)
    ys = np.empty_like(s)
    for i, prim in enumerate(tr.primitives):
        mask = idx == i
        if not mask.any():
            continue
        span = cum[i + 1] - cum[i]
        u = (s[mask] - cum[i]) / span if span > 0.0 else np.zeros(mask.sum())
        if isinstance(prim, Segment):
            xs[mask] = prim.start.x + (prim.end.x - prim.start.x) * u
            ys[mask] = prim.start.y + (prim.end.y - prim.start.y) * u
        else:
            sgn = 1.0 if prim.direction == "ccw" else -1.0
            ang = prim.start_angle + sgn * prim.sweep * u
            xs[mask] = prim.center.x + prim.radius * np.cos(ang)
            ys[mask] = prim.center.y + prim.radius * np.sin(ang)
    return xs, ys


def placement_angle_profile(m: Motion, n: int):
    """Placement angles at n uniform parameters, continuously unwrapped."""
    if n < 2:
        raise ValueError("profile needs at least two samples")
    total = m.length
    theta0 = placement_angle(m.start)
    if total == 0.0 or not m.schedule:
        return np.full(n, theta0)
    s_values = np.linspace(0.0, total, n)
    a_len, b_len = _arclen_maps(m, s_values)
    ax, ay = _points_on_trajectory(m.traj_a, a_len, m.start.a)
    bx, by = _points_on_trajectory(m.traj_b, b_len, m.start.b)
    raw = np.arctan2(ay - by, ax - bx)
    unwrapped = np.unwrap(raw)
    return unwrapped + (theta0 - unwrapped[0])


# ---------------------------------------------------------------------------
# coupling


class _Stretch(NamedTuple):
    s_lo: float
    s_hi: float
    theta_lo: float
    theta_hi: float
    robot: str
    prim: Primitive
    prim_u0: float  # fraction of prim at s_lo
    prim_u1: float
    static: Point


def _stretch_theta_delta(prim: Primitive, static: Point, moving_is_a: bool,
                         u0: float, u1: float) -> float:
    """Exact signed angle change of the placement angle along one primitive
    portion, one robot moving."""
    p0, p1 = prim.point_at(u0), prim.point_at(u1)
    if isinstance(prim, Arc):
        if dist(prim.center, static) > 1e-9 * (1.0 + prim.radius):
            raise CouplingFailure("arc is not centred on the parked robot")
        sgn = 1.0 if prim.direction == "ccw" else -1.0
        return sgn * prim.sweep * (u1 - u0)
    v0 = (p0 - static) if moving_is_a else (static - p0)
    v1 = (p1 - static) if moving_is_a else (static - p1)
    return _signed_angle(v0, v1)


def _build_stretches(m: Motion):
    stretches = []
    theta = placement_angle(m.start)
    for lo, hi, robot, base in _phase_windows(m):
        here = _positions_at(m, lo)
        static = here.b if robot == "A" else here.a
        traj = m.traj_a if robot == "A" else m.traj_b
        cum = traj.cumulative
        for i, prim in enumerate(traj.primitives):
            if cum[i + 1] <= base or cum[i] >= base + (hi - lo):
                continue
            s0 = lo + (max(cum[i], base) - base)
            s1 = lo + (min(cum[i + 1], base + (hi - lo)) - base)
            if s1 - s0 <= 0.0:
                continue
            span = cum[i + 1] - cum[i]
            u0 = (max(cum[i], base) - cum[i]) / span if span else 0.0
            u1 = (min(cum[i + 1], base + hi - lo) - cum[i]) / span \
                if span else 1.0
            d = _stretch_theta_delta(prim, static, robot == "A", u0, u1)
            stretches.append(_Stretch(s0, s1, theta, theta + d, robot,
                                      prim, u0, u1, static))
            theta += d
    return stretches, theta


def _theta_on(st: _Stretch, u: float) -> float:
    """Unwrapped placement angle at primitive fraction u of a stretch."""
    return st.theta_lo + _stretch_theta_delta(st.prim, st.static,
                                              st.robot == "A", st.prim_u0, u)


def _s_of_u(st: _Stretch, u: float) -> float:
    if st.prim_u1 == st.prim_u0:
        return st.s_lo
    frac = (u - st.prim_u0) / (st.prim_u1 - st.prim_u0)
    return st.s_lo + (st.s_hi - st.s_lo) * frac


def _invert_theta(st: _Stretch, ua: float, ub: float, target: float) -> float:
    """Fraction u in [ua, ub] where the (monotone) angle equals target;
    bisection refined to 1e-10 rad."""
    ta, tb = _theta_on(st, ua), _theta_on(st, ub)
    if ta == tb:
        return ua
    rising = tb > ta
    lo, hi = ua, ub
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        tm = _theta_on(st, mid)
        if abs(tm - target) <= 1e-10:
            return mid
        if (tm < target) == rising:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _find_windows(stretches, theta_start, theta_end, sgn):
    """Reversal windows as (s_open, s_close) pairs with equal profile angle.

    Working in the signed space (multiply angles by sgn) the coupled profile
    is the running max clamped at the final angle; windows are the maximal
    intervals where the raw profile departs from it."""
    tol = 1e-12
    cap = sgn * theta_end
    v = sgn * theta_start
    windows = []
    open_s = open_v = None
    for st in stretches:
        pieces = [(st.prim_u0, st.prim_u1)]
        while pieces:
            ua, ub = pieces.pop()
            if ua == ub:
                continue
            ta, tb = sgn * _theta_on(st, ua), sgn * _theta_on(st, ub)
            if open_s is None:
                if tb >= ta - tol:
                    if tb > cap + 1e-9:
                        u_star = _invert_theta(st, ua, ub, sgn * cap)
                        open_s, open_v = _s_of_u(st, u_star), cap
                        v = cap
                    else:
                        v = max(v, tb)
                    continue
                open_s, open_v = _s_of_u(st, ua), v
            rising = tb >= ta
            if rising:
                crossed = ta <= open_v + tol and tb >= open_v - tol
            else:
                crossed = ta >= open_v - tol and tb <= open_v + tol
            if crossed:
                u_star = _invert_theta(st, ua, ub, sgn * open_v)
                windows.append((open_s, _s_of_u(st, u_star)))
                v = open_v
                open_s = open_v = None
                if u_star < ub:
                    pieces.append((u_star, ub))
    if open_s is not None:
        if abs(open_v - cap) <= 1e-9:
            windows.append((open_s, stretches[-1].s_hi))
        else:
            raise CouplingFailure("unclosed reversal window")
    return [(a, b) for a, b in windows if b > a]


def couple(m: Motion) -> Motion:
    """Monotone (coupled) version of a decoupled optimal motion.

    Reversal windows of the unwrapped placement-angle profile are replaced
    by straight joint interpolations of both robots; total trace length is
    preserved (the inputs are optimal, so chords cost the same)."""
    if m.is_coupled or not m.schedule or m.length == 0.0:
        return m
    stretches, theta_end = _build_stretches(m)
    theta_start = placement_angle(m.start)
    net = theta_end - theta_start
    if m.orientation == "ccw":
        sgn = 1.0
    elif m.orientation == "cw":
        sgn = -1.0
    else:
        sgn = 1.0 if net >= 0.0 else -1.0
    windows = _find_windows(stretches, theta_start, theta_end, sgn)
    total = m.length
    events = [0.0]
    for w in windows:
        events += [w[0], w[1]]
    events.append(total)

    new_a, new_b, items = [], [], []
    a_off = b_off = 0.0

    def emit_single(robot, prims):
        nonlocal a_off, b_off
        for prim in prims:
            ln = prim.length
            if ln <= 0.0:
                continue
            if robot == "A":
                new_a.append(prim)
                items.append(JointItem(a_off, a_off + ln, b_off, b_off))
                a_off += ln
            else:
                new_b.append(prim)
                items.append(JointItem(a_off, a_off, b_off, b_off + ln))
                b_off += ln

    phase_spans = _phase_windows(m)
    for k in range(len(events) - 1):
        s0, s1 = events[k], events[k + 1]
        if s1 - s0 <= 1e-12 * (1.0 + total):
            continue
        if k % 2 == 1:  # reversal window: one straight joint item
            p0 = _positions_at(m, s0)
            p1 = _positions_at(m, s1)
            la, lb = dist(p0.a, p1.a), dist(p0.b, p1.b)
            if la > 0.0:
                new_a.append(Segment(p0.a, p1.a))
            if lb > 0.0:
                new_b.append(Segment(p0.b, p1.b))
            if la > 0.0 or lb > 0.0:
                items.append(JointItem(a_off, a_off + la, b_off, b_off + lb))
                a_off += la
                b_off += lb
        else:  # copy the original phases restricted to [s0, s1]
            for lo, hi, robot, base in phase_spans:
                o0, o1 = max(lo, s0), min(hi, s1)
                if o1 - o0 <= 1e-12 * (1.0 + total):
                    continue
                traj = m.traj_a if robot == "A" else m.traj_b
                emit_single(robot,
                            traj.slice(base + (o0 - lo), base + (o1 - lo)))
    coupled = Motion(Trajectory(tuple(new_a)), Trajectory(tuple(new_b)),
                     tuple(items), m.orientation, m.start, m.end)
    if abs(coupled.length - m.length) > 1e-9 * (1.0 + m.length):
        raise CouplingFailure(
            f"coupling changed length by {coupled.length - m.length}")
    return coupled


# ---------------------------------------------------------------------------
# rigid transforms used by the planner's symmetry reductions


def _flip(orientation: str) -> str:
    if orientation == "ccw":
        return "cw"
    if orientation == "cw":
        return "ccw"
    return orientation


def _reverse_trajectory(tr: Trajectory) -> Trajectory:
    return Trajectory(tuple(p.reversed() for p in reversed(tr.primitives)))


def reverse_motion(m: Motion) -> Motion:
    """Time reversal: swap endpoints, reverse primitives and phases."""
    if m.is_coupled:
        raise ValueError("reverse_motion expects a decoupled motion")
    na, nb = len(m.traj_a.primitives), len(m.traj_b.primitives)
    phases = []
    for ph in reversed(m.schedule):
        n = na if ph.robot == "A" else nb
        phases.append(Phase(ph.robot, n - ph.stop, n - ph.start))
    return Motion(_reverse_trajectory(m.traj_a), _reverse_trajectory(m.traj_b),
                  tuple(phases), _flip(m.orientation), m.end, m.start)


def _map_primitive(p: Primitive, frame: Frame) -> Primitive:
    if isinstance(p, Segment):
        return Segment(frame.apply(p.start), frame.apply(p.end))
    direction = p.direction
    if frame.flips_orientation:
        direction = "cw" if direction == "ccw" else "ccw"
    return Arc(frame.apply(p.center), p.radius,
               frame.apply_angle(p.start_angle),
               frame.apply_angle(p.end_angle), direction)


def transform_motion(m: Motion, frame: Frame) -> Motion:
    orientation = _flip(m.orientation) if frame.flips_orientation \
        else m.orientation
    mapped_start = Placement(frame.apply(m.start.a), frame.apply(m.start.b))
    mapped_end = Placement(frame.apply(m.end.a), frame.apply(m.end.b))
    return Motion(
        Trajectory(tuple(_map_primitive(p, frame) for p in m.traj_a.primitives)),
        Trajectory(tuple(_map_primitive(p, frame) for p in m.traj_b.primitives)),
        m.schedule, orientation, mapped_start, mapped_end)


REFLECT_FRAME = Frame(rotation=0.0, translation=Point(0.0, 0.0),
                      reflected=True)


def reflect_motion(m: Motion) -> Motion:
    return transform_motion(m, REFLECT_FRAME)


def swap_roles(m: Motion) -> Motion:
    """Relabel the robots; the placement angle shifts by pi, so the net
    orientation is preserved."""
    phases = tuple(Phase("A" if ph.robot == "B" else "B", ph.start, ph.stop)
                   for ph in m.schedule) if not m.is_coupled else tuple(
        JointItem(it.b_lo, it.b_hi, it.a_lo, it.a_hi) for it in m.schedule)
    return Motion(m.traj_b, m.traj_a, phases, m.orientation,
                  Placement(m.start.b, m.start.a),
                  Placement(m.end.b, m.end.a))
