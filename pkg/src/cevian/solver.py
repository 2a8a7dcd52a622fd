"""Top-level constraint solving: two fixed elements plus a target.

Supported fixed pairs (either labeling of A/B is accepted and silently
relabeled to the canonical one, with the permutation undone in the
output):

* both bisectors ``{l_a, l_b}`` with any of the 13 remaining elements as
  target;
* both heights ``{h_a, h_b}`` with the bisector or median at the
  smaller-height vertex as target;
* a median and the other vertex's height ``{m_a, h_b}`` with the third
  vertex's bisector ``l_c`` as target.

``solve`` enumerates every solution by root finding on the family curve
(the source of truth); ``expected_count`` predicts the count from the
closed-form band table and is used as an independent cross-check.  The
two-solution bands for prescribed heights in the bisectors pattern run up
to the bisector at the *same* vertex (``h_a < l_a``, ``h_b < l_b``),
which is also what the curve extrema give; reports carry a note to that
effect.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import bisectors as bis
from . import heights as hts
from . import median_height as mdh
from .curves import solve_curve
from .errors import UnsupportedPattern
from .geometry import ElementKind, Triangle, element, triangle_from_heights_gamma
from .numerics import ScanConfig

_PI = math.pi

PATTERN_BISECTORS = "bisectors"
PATTERN_HEIGHTS = "heights"
PATTERN_MEDIAN_HEIGHT = "medianheight"

_TABLE_EDGE_TOL = 1e-8


@dataclass(frozen=True)
class SolveProblem:
    """Two fixed (kind, value) pairs and a target (kind, value)."""

    fixed: tuple[tuple[ElementKind, float], tuple[ElementKind, float]]
    target: tuple[ElementKind, float]

    def __post_init__(self) -> None:
        kinds = {k for k, _ in self.fixed}
        if len(kinds) != 2:
            raise UnsupportedPattern("the two fixed elements must be distinct")
        for k, v in (*self.fixed, self.target):
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise UnsupportedPattern(f"{k.value} must be positive finite, got {v!r}")
            if k.is_angle and not v < _PI:
                raise UnsupportedPattern(f"angle {k.value} must lie in (0, pi)")
        if self.target[0] in kinds:
            raise UnsupportedPattern("target element repeats a fixed element")

    def value_of(self, kind: ElementKind) -> float:
        for k, v in self.fixed:
            if k is kind:
                return v
        raise KeyError(kind)

    def swapped_ab(self) -> "SolveProblem":
        return SolveProblem(
            fixed=tuple((k.swapped_ab(), v) for k, v in self.fixed),
            target=(self.target[0].swapped_ab(), self.target[1]),
        )


@dataclass(frozen=True)
class Solution:
    """One found triangle with its family coordinates and residuals.

    ``residuals`` maps each prescribed element's code to the relative
    mismatch of the materialized triangle, recomputed from its sides.
    """

    triangle: Triangle
    parameter: float
    branch: str
    flag: str
    residuals: dict[str, float]


@dataclass(frozen=True)
class SolveReport:
    problem: SolveProblem
    solutions: tuple[Solution, ...]
    count: int
    classification: str
    limits: object  # LimitSet | HeightsAnalysis | list[Branch] | None
    config: ScanConfig
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class _Canonical:
    """Problem relabeled into the family's canonical orientation."""

    pattern: str
    swapped: bool
    spec: object
    target_kind: ElementKind
    target_value: float


def canonicalize(problem: SolveProblem) -> _Canonical:
    """Detect the pattern and relabel A <-> B into canonical form."""
    kinds = frozenset(k for k, _ in problem.fixed)
    tk, tv = problem.target

    if kinds == frozenset({ElementKind.BISECTOR_A, ElementKind.BISECTOR_B}):
        la = problem.value_of(ElementKind.BISECTOR_A)
        lb = problem.value_of(ElementKind.BISECTOR_B)
        swapped = la > lb
        if swapped:
            la, lb, tk = lb, la, tk.swapped_ab()
        return _Canonical(PATTERN_BISECTORS, swapped,
                          bis.BisectorsSpec(l1=lb, l2=la), tk, tv)

    if kinds == frozenset({ElementKind.HEIGHT_A, ElementKind.HEIGHT_B}):
        ha = problem.value_of(ElementKind.HEIGHT_A)
        hb = problem.value_of(ElementKind.HEIGHT_B)
        if tk not in (ElementKind.BISECTOR_A, ElementKind.MEDIAN_A,
                      ElementKind.BISECTOR_B, ElementKind.MEDIAN_B):
            raise UnsupportedPattern(
                f"with two fixed heights, only the bisector or median at the "
                f"smaller-height vertex is an analyzed target, not {tk.value}")
        swapped = tk.vertex == "B"
        if swapped:
            ha, hb, tk = hb, ha, tk.swapped_ab()
        if ha > hb:
            raise UnsupportedPattern(
                "the bisector/median target must sit at the vertex with the "
                "smaller prescribed height")
        return _Canonical(PATTERN_HEIGHTS, swapped,
                          hts.HeightsFamilySpec(h1=ha, h2=hb), tk, tv)

    if kinds == frozenset({ElementKind.MEDIAN_A, ElementKind.HEIGHT_B}) or \
            kinds == frozenset({ElementKind.MEDIAN_B, ElementKind.HEIGHT_A}):
        swapped = ElementKind.MEDIAN_B in kinds
        p = problem.swapped_ab() if swapped else problem
        if tk is not ElementKind.BISECTOR_C:
            raise UnsupportedPattern(
                f"with a fixed median and opposite height, only the third "
                f"vertex's bisector is an analyzed target, not {tk.value}")
        return _Canonical(PATTERN_MEDIAN_HEIGHT, swapped,
                          mdh.MedianHeightSpec(h=p.value_of(ElementKind.HEIGHT_B),
                                               m=p.value_of(ElementKind.MEDIAN_A)),
                          tk, tv)

    raise UnsupportedPattern(
        "fixed pair must be two bisectors {l_a, l_b}, two heights {h_a, h_b} "
        "or a median plus the opposite vertex's height {m_a, h_b}")


def _residuals(tri: Triangle, prescriptions: Sequence[tuple[ElementKind, float]]) -> dict[str, float]:
    out = {}
    for kind, value in prescriptions:
        scale = max(abs(value), 1e-300)
        out[kind.value] = abs(element(tri, kind) - value) / scale
    return out


def _finish(problem: SolveProblem, canon: _Canonical, solutions: list[Solution],
            case: str, limits_obj: object, cfg: ScanConfig,
            notes: list[str]) -> SolveReport:
    if canon.swapped:
        solutions = [
            Solution(triangle=s.triangle.swapped_ab(), parameter=s.parameter,
                     branch=s.branch, flag=s.flag,
                     residuals={ElementKind.from_code(k).swapped_ab().value: v
                                for k, v in s.residuals.items()})
            for s in solutions
        ]
        notes.append("input was relabeled A<->B to the family's canonical "
                     "orientation; outputs are in the original labeling")
    solutions.sort(key=lambda s: s.parameter)
    classification = f"{canon.pattern}:{canon.target_kind.value}:{case}"
    return SolveReport(
        problem=problem,
        solutions=tuple(solutions),
        count=len(solutions),
        classification=classification,
        limits=limits_obj,
        config=cfg,
        notes=tuple(notes),
    )


def solve(problem: SolveProblem, cfg: ScanConfig = ScanConfig()) -> SolveReport:
    """Enumerate all triangles satisfying the problem.

    Counts come from curve root enumeration; targets inside the residual
    band of a curve extremum collapse to a single ``tangent``-flagged
    touch solution, and targets at a non-attained family limit are labeled
    ``at-limit`` with whatever roots genuinely exist.
    """
    canon = canonicalize(problem)
    tk, tv = canon.target_kind, canon.target_value
    notes: list[str] = []
    prescriptions = [*problem.fixed, problem.target] if not canon.swapped else \
        [*(problem.swapped_ab().fixed), (tk, tv)]

    if canon.pattern == PATTERN_BISECTORS:
        spec: bis.BisectorsSpec = canon.spec
        fs = bis.family_structure(spec, cfg)
        structure = bis.curve_structure(spec, tk, fs)
        roots, case = solve_curve(
            lambda b: bis.element_of_beta(spec, b, tk, cfg), structure, tv, cfg)
        sols = []
        for r in roots:
            _, tri = bis.member(spec, r.parameter, cfg)
            sols.append(Solution(
                triangle=tri, parameter=r.parameter,
                branch="part1" if r.parameter <= fs.beta0 else "part2",
                flag=r.flag, residuals=_residuals(tri, prescriptions)))
        if tk in (ElementKind.HEIGHT_A, ElementKind.HEIGHT_B):
            notes.append(
                "a prescribed height is bounded by the bisector at the same "
                "vertex; its two-solution band is (height-limit, same-vertex "
                "bisector)")
        return _finish(problem, canon, sols, case, fs.limits, cfg, notes)

    if canon.pattern == PATTERN_HEIGHTS:
        hspec: hts.HeightsFamilySpec = canon.spec
        analysis = hts.analyze(hspec, cfg)
        roots, case = solve_curve(
            lambda g: (hts.la_of_gamma if tk is ElementKind.BISECTOR_A
                       else hts.ma_of_gamma)(hspec, g),
            hts.curve_structure(hspec, tk, analysis), tv, cfg)
        sols = []
        for r in roots:
            tri = triangle_from_heights_gamma(hspec.h1, hspec.h2, r.parameter)
            sols.append(Solution(
                triangle=tri, parameter=r.parameter, branch="",
                flag=r.flag, residuals=_residuals(tri, prescriptions)))
        return _finish(problem, canon, sols, case, analysis, cfg, notes)

    mspec: mdh.MedianHeightSpec = canon.spec
    found = mdh.solve_lc(mspec, tv, cfg)
    sols = [Solution(triangle=tri, parameter=g, branch=br.kind.value, flag="",
                     residuals=_residuals(tri, prescriptions))
            for br, g, tri in found]
    case = {1: "unique", 2: "two"}.get(len(sols), str(len(sols)))
    return _finish(problem, canon, sols, case, mdh.branches(mspec), cfg, notes)


def expected_count(problem: SolveProblem,
                   cfg: ScanConfig = ScanConfig()) -> int | None:
    """The solution count the closed-form band table predicts.

    Returns None when the target sits within the residual band of a band
    edge (extremum value or family limit), where the discrete count is not
    the table's business; ``solve`` handles those explicitly.
    """
    canon = canonicalize(problem)
    tk, tv = canon.target_kind, canon.target_value

    def near(edge: float) -> bool:
        # wider than the solve-side bands: the table has nothing reliable to
        # say once the target is closer to an edge than the curves can be
        # resolved near their degenerate folds
        tol = max(_TABLE_EDGE_TOL, 10.0 * cfg.residual_tol)
        return abs(tv - edge) <= tol * max(abs(edge), abs(tv))

    if canon.pattern == PATTERN_MEDIAN_HEIGHT:
        spec: mdh.MedianHeightSpec = canon.spec
        return len(mdh.branches(spec))  # raises InfeasibleSpec below h/2

    if canon.pattern == PATTERN_HEIGHTS:
        hspec: hts.HeightsFamilySpec = canon.spec
        analysis = hts.analyze(hspec, cfg)
        h1, h2 = hspec.h1, hspec.h2
        if tk is ElementKind.MEDIAN_A:
            if analysis.regime == "boundary":
                return None if near(h1) else (1 if tv > h1 else 0)
            if near(analysis.ma_min):
                return None
            return 2 if tv > analysis.ma_min else 0
        # bisector from A
        if near(h1):
            return None
        if tv < h1:
            return 0
        if analysis.regime == "equal":
            sup = math.sqrt(2.0) * h2
            if near(sup):
                return None
            return 2 if tv < sup else 1
        if analysis.regime == "upper":
            if analysis.l_max is None or near(analysis.l_max):
                return None
            return 3 if tv < analysis.l_max else 1
        return 1  # boundary/lower, tv > h1

    spec: bis.BisectorsSpec = canon.spec
    lim = bis.limits(spec, cfg)
    l1, l2 = spec.l1, spec.l2

    def banded(lo: float, hi: float, inside: int, below: int, above: int) -> int | None:
        if near(lo) or near(hi):
            return None
        if tv <= lo:
            return below
        return inside if tv < hi else above

    if tk is ElementKind.ANGLE_A:
        return None if near(lim.alpha_max) else (1 if tv < lim.alpha_max else 0)
    if tk is ElementKind.ANGLE_B:
        return None if near(lim.beta_max) else (1 if tv < lim.beta_max else 0)
    if tk is ElementKind.ANGLE_C:
        return None if near(_PI) else 1
    if tk is ElementKind.SIDE_A:
        return None if near(lim.a_star) else (1 if tv > lim.a_star else 0)
    if tk is ElementKind.SIDE_B:
        return None if near(lim.b_star) else (1 if tv > lim.b_star else 0)
    if tk is ElementKind.SIDE_C:
        return banded(lim.c_2star, lim.c_star, inside=1, below=0, above=0)
    if tk is ElementKind.HEIGHT_A:
        return banded(lim.ha_2star, l2, inside=2, below=1, above=0)
    if tk is ElementKind.HEIGHT_B:
        return banded(lim.hb_2star, l1, inside=2, below=1, above=0)
    if tk is ElementKind.HEIGHT_C:
        return 1
    if tk is ElementKind.MEDIAN_A:
        return banded(l2, lim.ma_star, inside=2, below=0, above=1)
    if tk is ElementKind.MEDIAN_B:
        return banded(l1, lim.mb_star, inside=2, below=0, above=1)
    if tk is ElementKind.MEDIAN_C:
        if lim.mc_star > 0.0 and near(lim.mc_star):
            return None
        return 1 if tv > lim.mc_star else 0
    if tk is ElementKind.BISECTOR_C:
        return 1
    raise UnsupportedPattern(f"no band table for target {tk.value}")
