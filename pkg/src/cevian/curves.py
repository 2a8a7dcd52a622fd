"""Root enumeration on piecewise-monotone family curves.

Every family in this package exposes elements as smooth curves over an
open parameter interval whose interior extrema are known (located in
closed form or by a dedicated search).  Splitting at those extrema leaves
monotone pieces, so a target value is bracketed by endpoint signs alone —
no dense scan can miss a root, even arbitrarily close to a fold.

Targets that land inside the residual band of an attained extremum are a
double root: the touch point is reported once, flagged ``tangent``, and
the two adjacent pieces are excluded.  Targets inside the band of a
non-attained endpoint limit keep their enumerated roots but are labeled
``at-limit`` so reports can surface the edge case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .numerics import ScanConfig, root_on_monotone_piece, shrink_interval


@dataclass(frozen=True)
class CurveStructure:
    """Monotonicity skeleton of one element curve.

    ``extrema`` lists interior attained extrema as (parameter, value, kind)
    with kind 'min' or 'max'; ``open_limits`` lists finite values the curve
    approaches at an open endpoint without attaining them.
    """

    interval: tuple[float, float]
    extrema: tuple[tuple[float, float, str], ...] = ()
    open_limits: tuple[float, ...] = ()


@dataclass(frozen=True)
class CurveRoot:
    parameter: float
    flag: str = ""  # "" or "tangent"


_COUNT_WORDS = {0: "none", 1: "unique", 2: "two", 3: "three"}


def residual_band(value: float, target: float, cfg: ScanConfig) -> float:
    """Half-width of the tolerance band around a curve value: targets this
    close to an extremum are treated as tangency, this close to a family
    limit as at-limit."""
    return cfg.residual_tol * max(abs(value), abs(target))


def solve_curve(f: Callable[[float], float], structure: CurveStructure,
                target: float, cfg: ScanConfig,
                probes: Sequence[float] = ()) -> tuple[list[CurveRoot], str]:
    """All parameters where the curve equals ``target``, plus a case label.

    The label is ``tangent`` when the target sits in an extremum band,
    ``at-limit`` when it sits in an endpoint-limit band, otherwise the
    count word (none/unique/two/three or the count itself beyond that).
    ``probes`` are optional extra sample points (e.g. log-spaced near an
    asymptote) used to narrow brackets before refinement.
    """
    lo, hi = shrink_interval(structure.interval[0], structure.interval[1],
                             cfg.endpoint_margin)
    g = lambda x: f(x) - target

    tangent_knots = [
        (x, v, k) for (x, v, k) in structure.extrema
        if abs(target - v) <= residual_band(v, target, cfg)
    ]
    tangent_params = {x for (x, _, _) in tangent_knots}

    cuts = [lo] + sorted(x for (x, _, _) in structure.extrema if lo < x < hi) + [hi]
    roots = [CurveRoot(x, "tangent") for (x, _, _) in tangent_knots]

    cache: dict[float, float] = {}

    def g_at(x: float) -> float:
        if x not in cache:
            cache[x] = g(x)
        return cache[x]

    for p_lo, p_hi in zip(cuts[:-1], cuts[1:]):
        if p_lo in tangent_params or p_hi in tangent_params:
            continue
        g_lo, g_hi = g_at(p_lo), g_at(p_hi)
        if g_lo != 0.0 and g_hi != 0.0 and (g_lo < 0.0) == (g_hi < 0.0):
            continue
        b_lo, b_hi, gb_lo, gb_hi = p_lo, p_hi, g_lo, g_hi
        for q in sorted(x for x in probes if p_lo < x < p_hi):
            g_q = g(q)
            if g_q == 0.0 or (g_q < 0.0) != (gb_lo < 0.0):
                b_hi, gb_hi = q, g_q
                break
            b_lo, gb_lo = q, g_q
        root = root_on_monotone_piece(g, b_lo, b_hi, cfg, scale=abs(target),
                                      f_lo=gb_lo, f_hi=gb_hi)
        if root is not None:
            roots.append(CurveRoot(root))

    roots.sort(key=lambda r: r.parameter)
    if tangent_knots:
        case = "tangent"
    elif any(abs(target - v) <= residual_band(v, target, cfg) for v in structure.open_limits):
        case = "at-limit"
    else:
        case = _COUNT_WORDS.get(len(roots), str(len(roots)))
    return roots, case


def log_probes(lo: float, upto: float, per_decade: int = 4) -> list[float]:
    """Log-spaced probe points in [lo, upto], densest near ``lo``."""
    if not (0 < lo < upto):
        return []
    decades = math.log10(upto / lo)
    n = max(2, int(decades * per_decade) + 1)
    return [lo * (upto / lo) ** (i / (n - 1)) for i in range(n)]
