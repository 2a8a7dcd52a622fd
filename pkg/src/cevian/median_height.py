"""The prescribed median-from-A plus height-from-B family.

A triangle with ``m_a = m`` and ``h_b = h`` requires ``m >= h/2`` (the
median must reach from the base line to the mid-line of the height).  The
median's slope angle against the base can then take two values,
``alpha = arcsin(h/(2m))`` or its supplement, splitting the family into an
acute and an obtuse branch; exactly at ``m = h/2`` only the perpendicular
slope survives.  Within a branch the triangles are indexed by ``gamma``,
the angle at C, on (0, pi - alpha):

    a = BC = h/sin(gamma)
    b = CA = m*sin(alpha + gamma)/sin(gamma)

The bisector from C along a branch,

    l_c = h*sin(alpha + gamma) / (sin(gamma/2) * (2*sin(alpha) + sin(alpha + gamma)))

is strictly decreasing, sweeping (0, inf) once, so a target ``l_c`` has
exactly one triangle per existing branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .curves import CurveStructure, log_probes, solve_curve
from .errors import DegenerateParameter, InfeasibleSpec
from .geometry import Triangle, make_triangle
from .numerics import ScanConfig

_PI = math.pi

# Root-scan window floor (fraction of the branch interval): closer to the
# ends the triangle slack is unrepresentable in doubles.  Cuts only targets
# beyond ~1e6x the prescribed scale.
_MARGIN_FLOOR = 1e-7


@dataclass(frozen=True)
class MedianHeightSpec:
    """Prescribed ``h = h_b`` and ``m = m_a``; feasible iff m >= h/2."""

    h: float
    m: float

    def __post_init__(self) -> None:
        if not (self.h > 0 and math.isfinite(self.h) and self.m > 0
                and math.isfinite(self.m)):
            raise ValueError(f"need positive finite h, m; got ({self.h!r}, {self.m!r})")


class BranchKind(Enum):
    """Slope configuration of the median against the base line."""

    ACUTE = "acute"            # alpha = arcsin(h/(2m)) < pi/2
    OBTUSE = "obtuse"          # alpha = pi - arcsin(h/(2m)) > pi/2
    PERPENDICULAR = "perpendicular"  # alpha = pi/2, only when m = h/2


@dataclass(frozen=True)
class Branch:
    kind: BranchKind
    alpha: float

    @property
    def gamma_interval(self) -> tuple[float, float]:
        return (0.0, _PI - self.alpha)


def branches(spec: MedianHeightSpec) -> list[Branch]:
    """The existing slope branches: two for m > h/2, one for m = h/2."""
    if spec.m < 0.5 * spec.h:
        raise InfeasibleSpec(
            f"median {spec.m!r} shorter than half the height {spec.h!r}: "
            "no triangle carries both")
    if spec.m == 0.5 * spec.h:
        return [Branch(BranchKind.PERPENDICULAR, 0.5 * _PI)]
    alpha1 = math.asin(spec.h / (2.0 * spec.m))
    return [Branch(BranchKind.ACUTE, alpha1), Branch(BranchKind.OBTUSE, _PI - alpha1)]


def _check_gamma(br: Branch, gamma: float) -> None:
    if not (0.0 < gamma < _PI - br.alpha):
        raise DegenerateParameter(
            f"gamma {gamma!r} outside (0, pi - alpha) for branch {br.kind.value}")


def lc_of_gamma(spec: MedianHeightSpec, br: Branch, gamma: float) -> float:
    """Bisector from C along the branch; strictly decreasing in gamma."""
    _check_gamma(br, gamma)
    sag = math.sin(br.alpha + gamma)
    return (spec.h * sag
            / (math.sin(0.5 * gamma) * (2.0 * math.sin(br.alpha) + sag)))


def triangle_on_branch(spec: MedianHeightSpec, br: Branch, gamma: float) -> Triangle:
    """Materialize the branch member at ``gamma``."""
    _check_gamma(br, gamma)
    s = math.sin(gamma)
    a = spec.h / s
    b = spec.m * math.sin(br.alpha + gamma) / s
    # angle between a and b at C is gamma; stable law-of-cosines form
    c = math.hypot(a - b, 2.0 * math.sqrt(a * b) * math.sin(0.5 * gamma))
    return make_triangle(a, b, c)


def solve_lc(spec: MedianHeightSpec, target: float,
             cfg: ScanConfig = ScanConfig()) -> list[tuple[Branch, float, Triangle]]:
    """One (branch, gamma, triangle) per existing branch for ``l_c = target``.

    The curve is monotone with range (0, inf), so each branch contributes
    exactly one root; log-spaced probes near gamma = 0 keep the initial
    bracket tight when the target is huge (l_c ~ 2h/(3 gamma) there).
    """
    if not (target > 0 and math.isfinite(target)):
        raise ValueError(f"target must be positive finite, got {target!r}")
    out: list[tuple[Branch, float, Triangle]] = []
    for br in branches(spec):
        top = br.gamma_interval[1]
        interval = (_MARGIN_FLOOR * top, (1.0 - _MARGIN_FLOOR) * top)
        width = interval[1] - interval[0]
        probes = log_probes(interval[0] * (1.0 + 1e-6), 0.1 * width)
        roots, _ = solve_curve(lambda g: lc_of_gamma(spec, br, g),
                               CurveStructure(interval), target, cfg,
                               probes=probes)
        for r in roots:
            out.append((br, r.parameter, triangle_on_branch(spec, br, r.parameter)))
    return out
