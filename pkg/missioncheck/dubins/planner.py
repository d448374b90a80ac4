"""Shortest curvature-bounded paths between two planar poses.

Each candidate word (LSL, RSR, LSR, RSL, LRL, RLR) is solved in closed form on
the problem scaled to unit turning radius; the shortest feasible one wins and
ties go to the earlier word in that order. Headings are measured from east,
counter-clockwise.
"""

import logging
import math
from dataclasses import dataclass

from .exceptions import PlanningError

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi
WRAP_TOLERANCE = 1e-12

ALL_WORDS = ("LSL", "RSR", "LSR", "RSL", "LRL", "RLR")
# the four-word subset flown by the search mission
FOUR_WORDS = ("LRL", "RSR", "RSL", "LSR")
WORD_SETS = {"all": ALL_WORDS, "paper4": FOUR_WORDS}


def mod2pi(theta: float) -> float:
    """Normalise to ``[0, 2*pi)``, snapping values within 1e-12 of 2*pi to 0."""
    value = math.fmod(theta, TWO_PI)
    if value < 0:
        value += TWO_PI
    if value >= TWO_PI - WRAP_TOLERANCE:
        value = 0.0
    return value


def angle_difference(a: float, b: float) -> float:
    """Smallest absolute difference between two headings."""
    diff = mod2pi(a - b)
    return min(diff, TWO_PI - diff)


@dataclass(frozen=True)
class Pose:
    x: float
    y: float
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", mod2pi(self.theta))

    @classmethod
    def parse(cls, text: str) -> "Pose":
        """Read ``x,y,theta``."""
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 3:
            msg = f"Pose must be 'x,y,theta', got {text!r}"
            raise ValueError(msg)
        x, y, theta = (float(part) for part in parts)
        return cls(x, y, theta)

    def distance_to(self, other: "Pose") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def mirrored(self) -> "Pose":
        """Reflection about the x-axis."""
        return Pose(self.x, -self.y, -self.theta)


@dataclass(frozen=True)
class DubinsPath:
    """Three segments: arc angles in radians, straight segments in metres."""

    word: str
    params: tuple[float, float, float]
    radius: float
    start: Pose

    def segment_lengths(self) -> tuple[float, float, float]:
        return tuple(  # type: ignore[return-value]
            param if kind == "S" else param * self.radius for kind, param in zip(self.word, self.params, strict=True)
        )

    @property
    def length(self) -> float:
        return sum(self.segment_lengths())

    @property
    def end(self) -> Pose:
        return pose_at(self, self.length)


def _solve(word: str, alpha: float, beta: float, d: float) -> tuple[float, float, float] | None:
    """Unit-radius segment parameters of ``word``, ``None`` when infeasible."""
    sa, sb = math.sin(alpha), math.sin(beta)
    ca, cb = math.cos(alpha), math.cos(beta)
    c_ab = math.cos(alpha - beta)
    if word == "LSL":
        p_squared = 2 + d * d - 2 * c_ab + 2 * d * (sa - sb)
        if p_squared < 0:
            return None
        tmp = math.atan2(cb - ca, d + sa - sb)
        return mod2pi(tmp - alpha), math.sqrt(p_squared), mod2pi(beta - tmp)
    if word == "RSR":
        p_squared = 2 + d * d - 2 * c_ab + 2 * d * (sb - sa)
        if p_squared < 0:
            return None
        tmp = math.atan2(ca - cb, d - sa + sb)
        return mod2pi(alpha - tmp), math.sqrt(p_squared), mod2pi(tmp - beta)
    if word == "LSR":
        p_squared = -2 + d * d + 2 * c_ab + 2 * d * (sa + sb)
        if p_squared < 0:
            return None
        p = math.sqrt(p_squared)
        tmp = math.atan2(-ca - cb, d + sa + sb) - math.atan2(-2.0, p)
        return mod2pi(tmp - alpha), p, mod2pi(tmp - mod2pi(beta))
    if word == "RSL":
        p_squared = -2 + d * d + 2 * c_ab - 2 * d * (sa + sb)
        if p_squared < 0:
            return None
        p = math.sqrt(p_squared)
        tmp = math.atan2(ca + cb, d - sa - sb) - math.atan2(2.0, p)
        return mod2pi(alpha - tmp), p, mod2pi(beta - tmp)
    if word == "RLR":
        cos_p = (6.0 - d * d + 2 * c_ab + 2 * d * (sa - sb)) / 8.0
        if abs(cos_p) > 1:
            return None
        phi = math.atan2(ca - cb, d - sa + sb)
        p = mod2pi(TWO_PI - math.acos(cos_p))
        t = mod2pi(alpha - phi + mod2pi(p / 2.0))
        return t, p, mod2pi(alpha - beta - t + mod2pi(p))
    if word == "LRL":
        cos_p = (6.0 - d * d + 2 * c_ab + 2 * d * (sb - sa)) / 8.0
        if abs(cos_p) > 1:
            return None
        phi = math.atan2(ca - cb, d + sa - sb)
        p = mod2pi(TWO_PI - math.acos(cos_p))
        t = mod2pi(-alpha - phi + p / 2.0)
        return t, p, mod2pi(mod2pi(beta) - alpha - t + mod2pi(p))
    msg = f"Unknown Dubins word {word!r}"
    raise ValueError(msg)


def candidates(start: Pose, goal: Pose, radius: float, words: tuple[str, ...] = ALL_WORDS) -> dict[str, DubinsPath]:
    """Closed-form path of every feasible word in ``words``."""
    if not radius > 0:
        msg = f"Turning radius must be positive, got {radius}"
        raise ValueError(msg)
    dx, dy = goal.x - start.x, goal.y - start.y
    d = math.hypot(dx, dy) / radius
    theta = mod2pi(math.atan2(dy, dx)) if d > 0 else 0.0
    alpha = mod2pi(start.theta - theta)
    beta = mod2pi(goal.theta - theta)
    paths = {}
    for word in words:
        params = _solve(word, alpha, beta, d)
        if params is None:
            continue
        t, p, q = params
        if word[1] == "S":
            # the straight segment is stored in metres
            p *= radius
        paths[word] = DubinsPath(word, (t, p, q), radius, start)
    return paths


def plan(start: Pose, goal: Pose, radius: float, words: tuple[str, ...] = ALL_WORDS) -> DubinsPath:
    """Shortest path from ``start`` to ``goal`` over ``words``.

    Raises:
        PlanningError: when no word in ``words`` is feasible.
    """
    if start == goal:
        return DubinsPath(words[0], (0.0, 0.0, 0.0), radius, start)
    paths = candidates(start, goal, radius, words)
    if not paths:
        msg = f"No feasible path among {', '.join(words)} from {start} to {goal}"
        raise PlanningError(msg)
    best = min(paths.values(), key=lambda path: (path.length, words.index(path.word)))
    logger.debug(f"Planned {best.word} of length {best.length:.3f} m from {start} to {goal}")
    return best


def _advance(pose: Pose, kind: str, distance: float, radius: float) -> Pose:
    if kind == "S":
        return Pose(pose.x + distance * math.cos(pose.theta), pose.y + distance * math.sin(pose.theta), pose.theta)
    sign = 1.0 if kind == "L" else -1.0
    theta = pose.theta + sign * distance / radius
    return Pose(
        pose.x + sign * radius * (math.sin(theta) - math.sin(pose.theta)),
        pose.y - sign * radius * (math.cos(theta) - math.cos(pose.theta)),
        theta,
    )


def pose_at(path: DubinsPath, arclength: float) -> Pose:
    """Pose after travelling ``arclength`` metres along ``path`` (clamped to its ends)."""
    remaining = min(max(arclength, 0.0), path.length)
    pose = path.start
    for kind, length in zip(path.word, path.segment_lengths(), strict=True):
        if remaining <= 0:
            break
        travelled = min(remaining, length)
        pose = _advance(pose, kind, travelled, path.radius)
        remaining -= travelled
    return pose


def sample(path: DubinsPath, step: float) -> list[tuple[float, Pose]]:
    """``(arclength, pose)`` every ``step`` metres, with the exact endpoint last."""
    if not step > 0:
        msg = f"Sampling step must be positive, got {step}"
        raise ValueError(msg)
    length = path.length
    count = math.floor(length / step + 1e-9)
    arclengths = [k * step for k in range(count + 1) if k * step < length - 1e-9]
    arclengths.append(length)
    if len(arclengths) > 1 and arclengths[0] == length:
        arclengths = [length]
    return [(s, pose_at(path, s)) for s in arclengths]
