"""The two-prescribed-heights family.

Fixing the heights from A and B (``h1 = h_a <= h_b = h2``) leaves a
one-parameter family indexed by ``gamma``, the angle at C, over (0, pi):
``a = h2/sin(gamma)``, ``b = h1/sin(gamma)``.  The bisector and median
from A restricted to this family are the two curves analyzed here.

Shape of the curves (gamma = pi is a vertical asymptote for both):

* ``l_a``: tends to ``h1`` at gamma -> 0 (not attained unless the minimum
  below exists).  For ``h2/2 < h1 < h2`` it has an interior local max and
  an attained isosceles minimum ``l_a = h1`` at ``gamma2 =
  arccos(h2/(2 h1))``, giving up to three coincident-target triangles.
  For ``h1 = h2`` it decreases from ``sqrt(2) h2`` to the attained minimum
  ``h1`` at pi/3, then rises.  For ``h1 <= h2/2`` it increases throughout.
* ``m_a``: single minimum; value ``h1`` at ``arccos(h2/(2 h1))`` when
  ``h1 >= h2/2``, else ``h2/2`` at ``arccos(2 h1/h2)``.  gamma = 0 is a
  second asymptote except exactly at ``h1 = h2/2``.

Curve evaluation never round-trips through side lengths: the closed forms
below stay accurate to machine rounding arbitrarily close to the
degenerate endpoints, where sides would lose the tiny triangle slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import CurveRoot, CurveStructure, solve_curve
from .errors import DegenerateParameter
from .geometry import ElementKind, Triangle, triangle_from_heights_gamma
from .numerics import ScanConfig, find_extrema

_PI = math.pi

# Root-scan window floor as a fraction of pi.  Nearer the endpoints the
# triangle slack drops below double rounding, so solutions there cannot be
# materialized; the cut only affects targets beyond ~1e6x the height scale
# (right end) or within ~1e-13 of the infimum (left end).
_MARGIN_FLOOR = 1e-7


@dataclass(frozen=True)
class HeightsFamilySpec:
    """Prescribed heights ``h1 = h_a`` and ``h2 = h_b`` with h1 <= h2."""

    h1: float
    h2: float

    def __post_init__(self) -> None:
        if not (0 < self.h1 <= self.h2 and math.isfinite(self.h2)):
            raise ValueError(f"need 0 < h1 <= h2, got ({self.h1!r}, {self.h2!r})")


@dataclass(frozen=True)
class HeightsAnalysis:
    """Extremum structure of the ``l_a`` and ``m_a`` curves.

    ``regime`` is one of ``equal`` (h1 = h2), ``upper`` (h2/2 < h1 < h2),
    ``boundary`` (h1 = h2/2) or ``lower`` (h1 < h2/2).  ``gamma2`` is the
    attained isosceles minimum of ``l_a`` (absent below the boundary),
    ``gamma_max``/``l_max`` the interior local maximum (upper regime only,
    no closed form).  ``gamma_m``/``ma_min`` locate the ``m_a`` minimum;
    in the boundary regime that minimum sits at the gamma -> 0 limit and
    ``gamma_m`` is reported as 0.0 without being attained.
    """

    regime: str
    gamma2: float | None
    gamma_max: float | None
    l_max: float | None
    gamma_m: float
    ma_min: float


def _check_gamma(gamma: float) -> None:
    if not (0.0 < gamma < _PI):
        raise DegenerateParameter(f"gamma {gamma!r} outside (0, pi)")


def la_of_gamma(spec: HeightsFamilySpec, gamma: float) -> float:
    """Bisector from A as a function of the angle at C.

    Factored form of sqrt(b*c*[1 - a^2/(b+c)^2]) with the common 1/sin
    pulled out; the ``b + c - a`` factor is expanded so nothing cancels
    near either endpoint.
    """
    _check_gamma(gamma)
    h1, h2 = spec.h1, spec.h2
    s = math.sin(gamma)
    q = math.sin(0.5 * gamma) ** 2
    cc = math.hypot(h2 - h1, 2.0 * math.sqrt(h1 * h2 * q))   # c * sin(gamma)
    excess = 4.0 * h1 * h2 * q / (cc + (h2 - h1))            # (b + c - a) * sin
    rad = h1 * cc * (h1 + h2 + cc) * excess
    return math.sqrt(rad) / (s * (h1 + cc))


def ma_of_gamma(spec: HeightsFamilySpec, gamma: float) -> float:
    """Median from A: (1/(2 sin g)) * sqrt(4 h1^2 + h2^2 - 4 h1 h2 cos g),
    rearranged around its nonnegative minimum."""
    _check_gamma(gamma)
    h1, h2 = spec.h1, spec.h2
    q = math.sin(0.5 * gamma) ** 2
    rad = (2.0 * h1 - h2) ** 2 + 8.0 * h1 * h2 * q
    return math.sqrt(rad) / (2.0 * math.sin(gamma))


def analyze(spec: HeightsFamilySpec, cfg: ScanConfig = ScanConfig()) -> HeightsAnalysis:
    """Classify the spec's regime and locate every curve extremum.

    ``gamma2`` and ``gamma_m`` come from their closed forms; the interior
    ``l_a`` maximum has none and is found by scanning (0, gamma2).
    """
    h1, h2 = spec.h1, spec.h2
    if h1 == h2:
        third = _PI / 3.0
        return HeightsAnalysis("equal", third, None, None, third, h1)
    if h1 == 0.5 * h2:
        return HeightsAnalysis("boundary", None, None, None, 0.0, h1)
    if h1 > 0.5 * h2:
        gamma2 = math.acos(h2 / (2.0 * h1))
        gamma_max, l_max = None, None
        for x, v, kind in find_extrema(lambda g: la_of_gamma(spec, g),
                                       (0.0, gamma2), cfg):
            if kind == "max":
                gamma_max, l_max = x, v
        return HeightsAnalysis("upper", gamma2, gamma_max, l_max, gamma2, h1)
    gamma_m = math.acos(2.0 * h1 / h2)
    return HeightsAnalysis("lower", None, None, None, gamma_m, 0.5 * h2)


def curve_structure(spec: HeightsFamilySpec, kind: ElementKind,
                    analysis: HeightsAnalysis) -> CurveStructure:
    """Monotonicity skeleton of the requested curve, over (0, pi) floored
    to the representable window."""
    interval = (_MARGIN_FLOOR * _PI, (1.0 - _MARGIN_FLOOR) * _PI)
    if kind is ElementKind.BISECTOR_A:
        if analysis.regime == "equal":
            return CurveStructure(interval,
                                  extrema=((analysis.gamma2, spec.h1, "min"),),
                                  open_limits=(math.sqrt(2.0) * spec.h2,))
        if analysis.regime == "upper":
            extrema = []
            if analysis.gamma_max is not None:
                extrema.append((analysis.gamma_max, analysis.l_max, "max"))
            extrema.append((analysis.gamma2, spec.h1, "min"))
            return CurveStructure(interval, extrema=tuple(extrema),
                                  open_limits=(spec.h1,))
        return CurveStructure(interval, open_limits=(spec.h1,))
    if kind is ElementKind.MEDIAN_A:
        if analysis.regime == "boundary":
            return CurveStructure(interval, open_limits=(analysis.ma_min,))
        return CurveStructure(
            interval, extrema=((analysis.gamma_m, analysis.ma_min, "min"),))
    raise ValueError(f"no analyzed curve for {kind} in the heights family")


def solve_third_detailed(spec: HeightsFamilySpec, kind: ElementKind, target: float,
                         cfg: ScanConfig = ScanConfig()) -> tuple[list[CurveRoot], str]:
    """Roots of ``element(gamma) = target`` plus the case label."""
    if not (target > 0 and math.isfinite(target)):
        raise ValueError(f"target must be positive finite, got {target!r}")
    analysis = analyze(spec, cfg)
    structure = curve_structure(spec, kind, analysis)
    f = (la_of_gamma if kind is ElementKind.BISECTOR_A else ma_of_gamma)
    return solve_curve(lambda g: f(spec, g), structure, target, cfg)


def solve_third(spec: HeightsFamilySpec, kind: ElementKind, target: float,
                cfg: ScanConfig = ScanConfig()) -> list[tuple[float, Triangle]]:
    """All triangles of the family whose ``kind`` element equals ``target``,
    as (gamma, triangle) pairs ordered by gamma.  Empty list: no triangle."""
    roots, _ = solve_third_detailed(spec, kind, target, cfg)
    return [(r.parameter, triangle_from_heights_gamma(spec.h1, spec.h2, r.parameter))
            for r in roots]
