"""The two-prescribed-bisectors family.

Fixing the bisectors from A and B (``l2 = l_a <= l_b = l1``) leaves a
one-parameter family indexed by ``beta``, the angle at B, on
``(0, beta_max)`` with ``beta_max = 2*arctan(l2/l1)``.  Realization is a
two-stage solve in angle space:

1. the bisector ratio ``l_a/l_b`` of a triangle depends only on its
   angles, and at fixed ``beta`` it falls strictly from 1 (at
   ``alpha = beta``) to ``tan(beta/2)`` (as ``gamma -> 0``), so there is a
   unique ``alpha`` with ratio ``l2/l1`` whenever ``beta < beta_max``;
2. uniform scaling then pins ``l_b = l1`` (and ``l_a = l2`` follows).

Both family endpoints are degenerate: at ``beta -> 0`` the triangle
collapses onto a segment (sides tend to the closed forms ``a_star +
b_star = c_star``), at ``beta -> beta_max`` it opens into two parallel
rays (sides a, b blow up, c -> c_2star).  Endpoint quantities are never
sampled; :class:`LimitSet` carries their closed forms and
:func:`endpoint_limit` confirms them by extrapolation.

Two interior angles organize every curve of the family:

* ``beta0``: the isosceles member (angle at A equals angle at C), where
  ``h_b`` peaks at ``l1``, ``m_b`` bottoms at ``l1`` and ``l_c = l2``;
* ``beta_ha``: where half the angle at A plus the angle at B is a right
  angle, so ``h_a`` peaks at ``l2`` and ``m_a`` bottoms at ``l2``.

``alpha``, ``a``, ``b``, ``l_c``, ``m_c``, ``h_c`` rise monotonically
along the sweep; ``gamma`` and ``c`` fall; the four height/median curves
above are unimodal.  Neither ``beta0`` nor ``beta_ha`` has a closed form;
they are roots of monotone angle sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import CurveStructure
from .errors import DegenerateParameter, NoConvergence
from .geometry import (
    ElementKind,
    Triangle,
    bisector_from_sides,
    median_from_sides,
    triangle_from_angles,
)
from .numerics import (
    Bracket,
    ScanConfig,
    extrapolate_to_zero,
    refine_root,
    root_on_monotone_piece,
    shrink_interval,
)

_PI = math.pi


@dataclass(frozen=True)
class BisectorsSpec:
    """Prescribed bisectors ``l1 = l_b`` and ``l2 = l_a`` with l2 <= l1."""

    l1: float
    l2: float

    def __post_init__(self) -> None:
        if not (0 < self.l2 <= self.l1 and math.isfinite(self.l1)):
            raise ValueError(f"need 0 < l2 <= l1, got ({self.l1!r}, {self.l2!r})")

    @property
    def beta_max(self) -> float:
        return 2.0 * math.atan2(self.l2, self.l1)


@dataclass(frozen=True)
class LimitSet:
    """Closed-form boundary quantities of the family.

    Starred values are the collinear limit at beta -> 0 (``a_star + b_star
    = c_star`` holds exactly: ``b_star`` is stored as the complement);
    double-starred values are the parallel-rays limit at beta -> beta_max.
    ``beta0`` (the isosceles member) is located numerically.
    """

    c_star: float
    a_star: float
    b_star: float
    beta_max: float
    alpha_max: float
    c_2star: float
    ha_2star: float
    hb_2star: float
    ma_star: float
    mb_star: float
    mc_star: float
    beta0: float


def shape_ratio(alpha: float, beta: float) -> float:
    """Ratio ``l_a/l_b`` of any triangle with angles ``alpha``, ``beta``.

    Scale-free by similarity; the common factor sin(gamma) of both
    bisectors is cancelled so the expression stays finite as gamma -> 0.
    """
    gamma = _PI - alpha - beta
    if alpha <= 0.0 or beta <= 0.0 or gamma <= 0.0:
        raise DegenerateParameter(
            f"angles ({alpha!r}, {beta!r}) do not form a triangle")
    sa, sb, sg = math.sin(alpha), math.sin(beta), math.sin(gamma)
    return (sb * math.cos(0.5 * alpha) * (sa + sg)) / (
        sa * math.cos(0.5 * beta) * (sb + sg))


def _inner_alpha(spec: BisectorsSpec, beta: float, cfg: ScanConfig) -> float:
    """The unique alpha in (beta, pi - beta) with shape_ratio = l2/l1."""
    if spec.l1 == spec.l2:
        return beta
    r = spec.l2 / spec.l1
    g = lambda a: shape_ratio(a, beta) - r
    # ratio(beta, beta) == 1 exactly; shrink the far end until the sign flips
    delta = 1e-12 * (_PI - 2.0 * beta)
    for _ in range(6):
        hi = _PI - beta - delta
        g_hi = g(hi)
        if g_hi < 0.0:
            return refine_root(g, Bracket(beta, hi, 1.0 - r, g_hi), cfg, scale=r)
        delta *= 1e-3
    raise NoConvergence(
        f"could not bracket the bisector ratio at beta={beta!r}")


def member(spec: BisectorsSpec, beta: float,
           cfg: ScanConfig = ScanConfig()) -> tuple[float, Triangle]:
    """The unique family member at ``beta``: its angle at A and the triangle
    scaled so the bisector from B is exactly ``l1``."""
    if not (0.0 < beta < spec.beta_max):
        raise DegenerateParameter(
            f"beta {beta!r} outside (0, {spec.beta_max!r})")
    alpha = _inner_alpha(spec, beta, cfg)
    return alpha, triangle_from_angles(alpha, beta, ElementKind.BISECTOR_B, spec.l1)


def _element_from_angles(spec: BisectorsSpec, alpha: float, beta: float,
                         kind: ElementKind) -> float:
    """Member element from its angles, without building a side triple.

    A side triple cannot represent the collinear fold's slack (which
    shrinks like beta^2) at extreme beta, but every element has a stable
    closed form anchored on the bisector relation c = l_b sin(alpha +
    beta/2)/sin(alpha); heights use h_a = l_a sin(alpha/2 + beta) and its
    mirror, which encode the family constraint exactly.
    """
    gamma = _PI - alpha - beta
    if kind is ElementKind.ANGLE_A:
        return alpha
    if kind is ElementKind.ANGLE_B:
        return beta
    if kind is ElementKind.ANGLE_C:
        return gamma
    if kind is ElementKind.HEIGHT_A:
        return spec.l2 * math.sin(0.5 * alpha + beta)
    if kind is ElementKind.HEIGHT_B:
        return spec.l1 * math.sin(alpha + 0.5 * beta)
    sa, sb, sg = math.sin(alpha), math.sin(beta), math.sin(gamma)
    c = spec.l1 * math.sin(alpha + 0.5 * beta) / sa
    if kind is ElementKind.SIDE_C:
        return c
    a = c * sa / sg
    b = c * sb / sg
    if kind is ElementKind.SIDE_A:
        return a
    if kind is ElementKind.SIDE_B:
        return b
    if kind is ElementKind.HEIGHT_C:
        return a * sb
    if kind is ElementKind.MEDIAN_A:
        return median_from_sides(a, b, c)
    if kind is ElementKind.MEDIAN_B:
        return median_from_sides(b, a, c)
    if kind is ElementKind.MEDIAN_C:
        return median_from_sides(c, a, b)
    if kind is ElementKind.BISECTOR_A:
        return spec.l2
    if kind is ElementKind.BISECTOR_B:
        return spec.l1
    if kind is ElementKind.BISECTOR_C:
        return bisector_from_sides(c, a, b)
    raise ValueError(f"unknown element kind {kind}")


def element_of_beta(spec: BisectorsSpec, beta: float, kind: ElementKind,
                    cfg: ScanConfig = ScanConfig()) -> float:
    """Element of the family member at ``beta``.

    Evaluated in angle space so curve scans stay finite and sign-correct
    arbitrarily close to both degenerate endpoints.
    """
    if not (0.0 < beta < spec.beta_max):
        raise DegenerateParameter(
            f"beta {beta!r} outside (0, {spec.beta_max!r})")
    alpha = _inner_alpha(spec, beta, cfg)
    return _element_from_angles(spec, alpha, beta, kind)


def _monotone_angle_root(spec: BisectorsSpec, shift: float, half_alpha: bool,
                         cfg: ScanConfig) -> float:
    """Root of alpha(beta)[/2] + beta[/2] - pi/2, a strictly increasing sum."""
    if spec.l1 == spec.l2:
        return _PI / 3.0  # alpha == beta: both sums reduce to 3*beta/2
    lo, hi = shrink_interval(0.0, spec.beta_max, cfg.endpoint_margin)

    def g(beta: float) -> float:
        alpha = _inner_alpha(spec, beta, cfg)
        return (0.5 * alpha + beta if half_alpha else alpha + 0.5 * beta) - shift

    root = root_on_monotone_piece(g, lo, hi, cfg, scale=1.0)
    if root is None:
        raise NoConvergence("interior angle-sum root did not bracket")
    return root


def beta0(spec: BisectorsSpec, cfg: ScanConfig = ScanConfig()) -> float:
    """The isosceles member's beta: angle at A equals angle at C, i.e.
    alpha + beta/2 = pi/2.  Here h_b peaks at l1 and m_b bottoms at l1."""
    return _monotone_angle_root(spec, 0.5 * _PI, half_alpha=False, cfg=cfg)


def beta_ha(spec: BisectorsSpec, cfg: ScanConfig = ScanConfig()) -> float:
    """The beta with alpha/2 + beta = pi/2, where h_a peaks at l2 and m_a
    bottoms at l2."""
    return _monotone_angle_root(spec, 0.5 * _PI, half_alpha=True, cfg=cfg)


def limits(spec: BisectorsSpec, cfg: ScanConfig = ScanConfig()) -> LimitSet:
    """Closed-form limit set (plus the numerically located beta0).

    ``c_star`` is the admissible root of the collinear-limit quadratic
    x^2 - (l1 + l2) x + (3/4) l1 l2; ``a_star`` follows from the bisector
    relation of the degenerate configuration and ``b_star = c_star -
    a_star`` exactly (``a_star`` lies in [c_star/2, c_star], so the
    subtraction is lossless).
    """
    l1, l2 = spec.l1, spec.l2
    c_star = 0.5 * (l1 + l2 + math.sqrt(l1 * l1 + l2 * l2 - l1 * l2))
    a_star = c_star * l1 / (2.0 * c_star - l1)
    b_star = c_star - a_star
    hyp = math.hypot(l1, l2)
    return LimitSet(
        c_star=c_star,
        a_star=a_star,
        b_star=b_star,
        beta_max=spec.beta_max,
        alpha_max=_PI - spec.beta_max,
        c_2star=0.5 * hyp,
        ha_2star=l1 * l2 / hyp,
        hb_2star=l1 * l2 / hyp,
        ma_star=b_star + 0.5 * a_star,
        mb_star=a_star + 0.5 * b_star,
        mc_star=0.5 * (a_star - b_star),
        beta0=beta0(spec, cfg),
    )


@dataclass(frozen=True)
class FamilyStructure:
    """Limit set plus the interior organizing angles of the sweep."""

    limits: LimitSet
    beta_ha: float

    @property
    def beta0(self) -> float:
        return self.limits.beta0


def family_structure(spec: BisectorsSpec,
                     cfg: ScanConfig = ScanConfig()) -> FamilyStructure:
    return FamilyStructure(limits=limits(spec, cfg), beta_ha=beta_ha(spec, cfg))


def curve_structure(spec: BisectorsSpec, kind: ElementKind,
                    fs: FamilyStructure) -> CurveStructure:
    """Monotonicity skeleton of one element curve, over (0, beta_max)
    floored to the resolvable window."""
    interval = (_SCAN_FLOOR * spec.beta_max, spec.beta_max)
    lim = fs.limits
    if kind is ElementKind.ANGLE_A:
        return CurveStructure(interval, open_limits=(lim.alpha_max,))
    if kind is ElementKind.ANGLE_B:
        return CurveStructure(interval, open_limits=(lim.beta_max,))
    if kind is ElementKind.ANGLE_C:
        return CurveStructure(interval, open_limits=(_PI,))
    if kind is ElementKind.SIDE_A:
        return CurveStructure(interval, open_limits=(lim.a_star,))
    if kind is ElementKind.SIDE_B:
        return CurveStructure(interval, open_limits=(lim.b_star,))
    if kind is ElementKind.SIDE_C:
        return CurveStructure(interval, open_limits=(lim.c_star, lim.c_2star))
    if kind is ElementKind.HEIGHT_A:
        return CurveStructure(interval, extrema=((fs.beta_ha, spec.l2, "max"),),
                              open_limits=(lim.ha_2star,))
    if kind is ElementKind.HEIGHT_B:
        return CurveStructure(interval, extrema=((fs.beta0, spec.l1, "max"),),
                              open_limits=(lim.hb_2star,))
    if kind is ElementKind.HEIGHT_C:
        return CurveStructure(interval)
    if kind is ElementKind.MEDIAN_A:
        return CurveStructure(interval, extrema=((fs.beta_ha, spec.l2, "min"),),
                              open_limits=(lim.ma_star,))
    if kind is ElementKind.MEDIAN_B:
        return CurveStructure(interval, extrema=((fs.beta0, spec.l1, "min"),),
                              open_limits=(lim.mb_star,))
    if kind is ElementKind.MEDIAN_C:
        lims = (lim.mc_star,) if lim.mc_star > 0.0 else ()
        return CurveStructure(interval, open_limits=lims)
    if kind is ElementKind.BISECTOR_C:
        return CurveStructure(interval)
    raise ValueError(f"{kind} is fixed by the family, not a target")


@dataclass(frozen=True)
class FamilySample:
    beta: float
    alpha: float
    triangle: Triangle
    part: int           # 1 below beta0 (l_c <= l2), 2 above
    is_beta0: bool


@dataclass(frozen=True)
class FamilyCurve:
    spec: BisectorsSpec
    samples: tuple[FamilySample, ...]

    @property
    def beta0_index(self) -> int:
        for i, s in enumerate(self.samples):
            if s.is_beta0:
                return i
        raise ValueError("curve has no beta0 sample")


# Interval floors, as fractions of beta_max.  Near the collinear fold
# (beta -> 0) the curves approach their limits quadratically while the
# inner alpha solve carries ulp noise amplified by 1/beta, so below
# ~3e-5 * beta_max computed values are indistinguishable from the limits;
# scans stop there (the cut is ~1e-9 relative, inside the table-edge
# tolerance).  Materializing a member additionally needs the side triple's
# slack (~1.3 beta^2 relative) to survive rounding, bounding sweeps at
# ~1e-6 * beta_max.  The parallel-rays end (beta -> beta_max) is linearly
# conditioned and needs no extra floor.
_SCAN_FLOOR = 3e-5
_SWEEP_FLOOR = 1e-6


def sweep(spec: BisectorsSpec, n: int,
          cfg: ScanConfig = ScanConfig()) -> FamilyCurve:
    """Materialize ``n`` uniform members plus the marked beta0 member,
    ordered by strictly increasing beta."""
    if n < 64:
        raise ValueError("sweep needs at least 64 samples")
    lo = max(cfg.endpoint_margin, _SWEEP_FLOOR) * spec.beta_max
    hi = spec.beta_max * (1.0 - max(cfg.endpoint_margin, 1e-9))
    b0 = beta0(spec, cfg)
    betas = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    merged = sorted(set(betas) | {b0})
    samples = []
    for b in merged:
        alpha, tri = member(spec, b, cfg)
        samples.append(FamilySample(
            beta=b, alpha=alpha, triangle=tri,
            part=1 if b <= b0 else 2, is_beta0=(b == b0)))
    return FamilyCurve(spec=spec, samples=tuple(samples))


def endpoint_limit(spec: BisectorsSpec, kind: ElementKind, end: str,
                   cfg: ScanConfig = ScanConfig(), t0_frac: float = 1e-3) -> float:
    """Richardson-style extrapolation of an element to a family endpoint.

    ``end`` is 'collinear' (beta -> 0) or 'parallel' (beta -> beta_max).
    Cross-checks the LimitSet closed forms; the endpoints themselves are
    degenerate and never evaluated.
    """
    if end == "collinear":
        f = lambda t: element_of_beta(spec, t, kind, cfg)
    elif end == "parallel":
        f = lambda t: element_of_beta(spec, spec.beta_max - t, kind, cfg)
    else:
        raise ValueError(f"end must be 'collinear' or 'parallel', got {end!r}")
    return extrapolate_to_zero(f, t0_frac * spec.beta_max)
