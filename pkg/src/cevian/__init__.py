"""Triangle families with two prescribed cevian-type elements.

Solve for all triangles carrying two fixed elements (two bisectors, two
heights, or a median plus a height) and a prescribed third element, by
sweeping the corresponding one-parameter family with bracketed root
finding.
"""

from .bisectors import BisectorsSpec, FamilyCurve, LimitSet, limits, member, sweep
from .errors import (
    CevianError,
    DegenerateParameter,
    InfeasibleSpec,
    InvalidScaleKind,
    NoConvergence,
    NonFiniteEvaluation,
    NonPositiveSide,
    TriangleInequalityViolated,
    UnsupportedPattern,
)
from .geometry import (
    ElementKind,
    Tolerance,
    Triangle,
    congruent,
    element,
    make_triangle,
    triangle_from_angles,
    triangle_from_heights_gamma,
)
from .heights import HeightsAnalysis, HeightsFamilySpec, analyze, solve_third
from .median_height import Branch, BranchKind, MedianHeightSpec, branches, solve_lc
from .numerics import Bracket, ScanConfig, find_brackets, find_extrema, refine_root
from .solver import SolveProblem, SolveReport, Solution, expected_count, solve

__version__ = "0.1.0"

__all__ = [
    "BisectorsSpec", "FamilyCurve", "LimitSet", "limits", "member", "sweep",
    "CevianError", "DegenerateParameter", "InfeasibleSpec", "InvalidScaleKind",
    "NoConvergence", "NonFiniteEvaluation", "NonPositiveSide",
    "TriangleInequalityViolated", "UnsupportedPattern",
    "ElementKind", "Tolerance", "Triangle", "congruent", "element",
    "make_triangle", "triangle_from_angles", "triangle_from_heights_gamma",
    "HeightsAnalysis", "HeightsFamilySpec", "analyze", "solve_third",
    "Branch", "BranchKind", "MedianHeightSpec", "branches", "solve_lc",
    "Bracket", "ScanConfig", "find_brackets", "find_extrema", "refine_root",
    "SolveProblem", "SolveReport", "Solution", "expected_count", "solve",
]
