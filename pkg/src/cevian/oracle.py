"""Brute-force verifier, independent of the family modules.

Enumerates triangle shape space on a dense (alpha, beta) grid, scales each
shape so the first fixed element matches exactly, and intersects the zero
curves of the two remaining residuals.  Candidate roots of the first
residual are bracketed inside single grid cells (so bisection can never
hop to another curve branch), walked along both grid directions, and the
second residual is bisected along the traced curve; grazing contacts are
additionally caught by cells where both residuals dip below threshold.
Refined points must polish below 1e-6 of scale and are merged by
congruence.  Nothing here knows about family parameterizations, limit
sets or monotonicity: agreement with the solver is the package's central
cross-check.

Desk-scale only: the default counting grid evaluates ~4e6 shapes with
plain vectorized formulas (a few hundred MB transiently).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteEvaluation
from .geometry import ElementKind, Tolerance, Triangle, congruent, element, make_triangle
from .numerics import count_sign_changes, shrink_interval
from .solver import SolveProblem, SolveReport

_PI = math.pi


@dataclass(frozen=True)
class GridSpec:
    """Shape-space grid: n_alpha x n_beta nodes over the open triangle
    {alpha, beta > margin*pi, alpha + beta < pi*(1 - margin)}."""

    n_alpha: int = 2000
    n_beta: int = 2000
    margin: float = 1e-3

    def __post_init__(self) -> None:
        if self.n_alpha < 50 or self.n_beta < 50:
            raise ValueError("grid needs at least 50 points per axis")
        if not 0.0 < self.margin < 0.01:
            raise ValueError("margin must lie in (0, 0.01)")


def _elem(kind: ElementKind, a, b, c):
    """Vectorized element from sides (numpy arrays or scalars)."""
    if kind is ElementKind.SIDE_A:
        return a
    if kind is ElementKind.SIDE_B:
        return b
    if kind is ElementKind.SIDE_C:
        return c
    if kind.is_angle:
        opp, s1, s2 = {"alpha": (a, b, c), "beta": (b, a, c), "gamma": (c, a, b)}[
            kind.value]
        return np.arccos(np.clip((s1 * s1 + s2 * s2 - opp * opp) / (2 * s1 * s2),
                                 -1.0, 1.0))
    opp, s1, s2 = {"a": (a, b, c), "b": (b, a, c), "c": (c, a, b)}[kind.value[-1]]
    if kind.value.startswith("h"):
        s = 0.5 * (a + b + c)
        area = np.sqrt(np.maximum(s * (s - a) * (s - b) * (s - c), 0.0))
        return 2.0 * area / opp
    if kind.value.startswith("m"):
        return 0.5 * np.sqrt(np.maximum(2 * s1 * s1 + 2 * s2 * s2 - opp * opp, 0.0))
    total = s1 + s2
    rad = s1 * s2 * (total * total - opp * opp)
    return np.sqrt(np.maximum(rad, 0.0)) / total


def _scale_anchor(problem: SolveProblem) -> tuple:
    """Fixed length element used to pin the scale, plus the two residual
    constraints (second fixed element and target)."""
    (k1, v1), (k2, v2) = problem.fixed
    if k1.is_angle and k2.is_angle:
        raise ValueError("oracle needs at least one fixed length to set scale")
    if k1.is_angle:
        (k1, v1), (k2, v2) = (k2, v2), (k1, v1)
    return (k1, v1), ((k2, v2), problem.target)


def _residuals_at(problem: SolveProblem, alpha, beta):
    """Residual pair of the scaled shape(s) at the given angles."""
    (k1, v1), ((k2, v2), (k3, v3)) = _scale_anchor(problem)
    a0, b0, c0 = np.sin(alpha), np.sin(beta), np.sin(alpha + beta)
    k = v1 / _elem(k1, a0, b0, c0)
    a, b, c = k * a0, k * b0, k * c0
    return _elem(k2, a, b, c) - v2, _elem(k3, a, b, c) - v3


def _elem_scalar(kind: ElementKind, a: float, b: float, c: float) -> float:
    """Scalar twin of :func:`_elem` (plain math is much faster than numpy
    scalars inside the bisection loops)."""
    if kind is ElementKind.SIDE_A:
        return a
    if kind is ElementKind.SIDE_B:
        return b
    if kind is ElementKind.SIDE_C:
        return c
    if kind.is_angle:
        opp, s1, s2 = {"alpha": (a, b, c), "beta": (b, a, c), "gamma": (c, a, b)}[
            kind.value]
        x = (s1 * s1 + s2 * s2 - opp * opp) / (2 * s1 * s2)
        return math.acos(max(-1.0, min(1.0, x)))
    opp, s1, s2 = {"a": (a, b, c), "b": (b, a, c), "c": (c, a, b)}[kind.value[-1]]
    if kind.value.startswith("h"):
        s = 0.5 * (a + b + c)
        return 2.0 * math.sqrt(max(s * (s - a) * (s - b) * (s - c), 0.0)) / opp
    if kind.value.startswith("m"):
        return 0.5 * math.sqrt(max(2 * s1 * s1 + 2 * s2 * s2 - opp * opp, 0.0))
    total = s1 + s2
    return math.sqrt(max(s1 * s2 * (total * total - opp * opp), 0.0)) / total


class _Tracer:
    """Scalar residual evaluation plus curve-local bisection helpers."""

    def __init__(self, problem: SolveProblem, lo: float, hi: float):
        self.anchor, ((self.k2, self.v2), (self.k3, self.v3)) = _scale_anchor(problem)
        self.lo = lo
        self.hi = hi

    def pair(self, alpha: float, beta: float) -> tuple[float, float]:
        k1, v1 = self.anchor
        a0, b0, c0 = math.sin(alpha), math.sin(beta), math.sin(alpha + beta)
        k = v1 / _elem_scalar(k1, a0, b0, c0)
        a, b, c = k * a0, k * b0, k * c0
        return (_elem_scalar(self.k2, a, b, c) - self.v2,
                _elem_scalar(self.k3, a, b, c) - self.v3)

    def r2_root(self, u_lo: float, u_hi: float, other: float,
                along_alpha: bool) -> float | None:
        """Bisect r2 = 0 inside one cell along alpha (or beta)."""
        def f(u: float) -> float:
            al, be = (u, other) if along_alpha else (other, u)
            return self.pair(al, be)[0]
        f_lo, f_hi = f(u_lo), f(u_hi)
        if not (math.isfinite(f_lo) and math.isfinite(f_hi)):
            return None
        if (f_lo < 0) == (f_hi < 0):
            return None
        for _ in range(80):
            mid = 0.5 * (u_lo + u_hi)
            if (f(mid) < 0) == (f_lo < 0):
                u_lo = mid
            else:
                u_hi = mid
        return 0.5 * (u_lo + u_hi)


@dataclass(frozen=True)
class _CurvePoint:
    """A point on the first residual's zero curve inside a known cell."""

    alpha: float
    beta: float
    cell_lo: float  # bracket of the swept coordinate inside its cell
    cell_hi: float
    r3: float


def _trace_columns(tracer: _Tracer, sweep: np.ndarray, walk: np.ndarray,
                   r2: np.ndarray, valid: np.ndarray,
                   along_alpha: bool) -> list[list[_CurvePoint]]:
    """On-curve points per walk line: r2 sign changes bracketed per cell."""
    columns: list[list[_CurvePoint]] = []
    n_sweep = len(sweep)
    for j, w in enumerate(walk):
        pts: list[_CurvePoint] = []
        rj = r2[:, j] if along_alpha else r2[j, :]
        vj = valid[:, j] if along_alpha else valid[j, :]
        for i in range(n_sweep - 1):
            if not (vj[i] and vj[i + 1]):
                continue
            if (rj[i] < 0) == (rj[i + 1] < 0):
                continue
            u = tracer.r2_root(sweep[i], sweep[i + 1], w, along_alpha)
            if u is None:
                continue
            al, be = (u, w) if along_alpha else (w, u)
            pts.append(_CurvePoint(al, be, sweep[i], sweep[i + 1],
                                   tracer.pair(al, be)[1]))
        columns.append(pts)
    return columns


def _intersect_between(tracer: _Tracer, p: _CurvePoint, q: _CurvePoint,
                       along_alpha: bool) -> tuple[float, float] | None:
    """Bisect r3 = 0 along the curve between two linked curve points."""
    w_lo = (p.beta, q.beta) if along_alpha else (p.alpha, q.alpha)
    u_bracket = (min(p.cell_lo, q.cell_lo), max(p.cell_hi, q.cell_hi))
    f_lo, f_hi = p.r3, q.r3

    def on_curve(w: float) -> tuple[float, float] | None:
        u = tracer.r2_root(u_bracket[0], u_bracket[1], w, along_alpha)
        if u is None:
            return None
        return (u, w) if along_alpha else (w, u)

    w_a, w_b = w_lo
    for _ in range(80):
        w_mid = 0.5 * (w_a + w_b)
        point = on_curve(w_mid)
        if point is None:
            return None
        r3_mid = tracer.pair(*point)[1]
        if (r3_mid < 0) == (f_lo < 0):
            w_a = w_mid
        else:
            w_b = w_mid
    return on_curve(0.5 * (w_a + w_b))


def _dip_candidates(r2: np.ndarray, r3: np.ndarray, valid: np.ndarray,
                    scale2: float, scale3: float) -> list[tuple[int, int]]:
    mask = valid & (np.abs(r2) < 1e-3 * scale2) & (np.abs(r3) < 1e-3 * scale3)
    return [tuple(ij) for ij in np.argwhere(mask)]


def _clusters(cells: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """Connected components (8-neighborhood) of sparse grid cells."""
    remaining = set(cells)
    out = []
    while remaining:
        seed = remaining.pop()
        comp = [seed]
        frontier = [seed]
        while frontier:
            i, j = frontier.pop()
            for di in (-1, 0, 1):
                for dj in (-1, 0, 1):
                    nb = (i + di, j + dj)
                    if nb in remaining:
                        remaining.discard(nb)
                        comp.append(nb)
                        frontier.append(nb)
        out.append(comp)
    return out


def grid_enumerate(problem: SolveProblem,
                   grid: GridSpec = GridSpec()) -> list[Triangle]:
    """Congruence-class representatives of all grid-visible solutions."""
    (k1, v1), ((k2, v2), (k3, v3)) = _scale_anchor(problem)
    scale2 = max(abs(v2), 1.0) if k2.is_angle else abs(v2)
    scale3 = max(abs(v3), 1.0) if k3.is_angle else abs(v3)

    lo = grid.margin * _PI
    hi = _PI * (1.0 - grid.margin)
    alphas = np.linspace(lo, hi, grid.n_alpha)
    betas = np.linspace(lo, hi, grid.n_beta)
    al, be = np.meshgrid(alphas, betas, indexing="ij")
    valid = (al + be) < hi
    with np.errstate(all="ignore"):
        r2, r3 = _residuals_at(problem, al, be)

    tracer = _Tracer(problem, lo, hi)
    hits: list[tuple[float, float]] = []

    # two passes: curve sections steep in one direction are caught by the other
    for along_alpha in (True, False):
        sweep_axis = alphas if along_alpha else betas
        walk_axis = betas if along_alpha else alphas
        columns = _trace_columns(tracer, sweep_axis, walk_axis, r2, valid,
                                 along_alpha)
        link = 3.0 * (sweep_axis[1] - sweep_axis[0])
        for j in range(len(columns) - 1):
            for p in columns[j]:
                u_p = p.alpha if along_alpha else p.beta
                for q in columns[j + 1]:
                    u_q = q.alpha if along_alpha else q.beta
                    if abs(u_q - u_p) > link:
                        continue
                    if (p.r3 < 0) == (q.r3 < 0):
                        continue
                    point = _intersect_between(tracer, p, q, along_alpha)
                    if point is not None:
                        hits.append(point)

    # grazing contacts: both residuals small but the target residual may
    # never change sign along the curve
    for comp in _clusters(_dip_candidates(r2, r3, valid, scale2, scale3)):
        best = min(comp, key=lambda ij: max(abs(r2[ij]) / scale2,
                                            abs(r3[ij]) / scale3))
        hits.append((alphas[best[0]], betas[best[1]]))

    found: list[Triangle] = []
    for al_r, be_r in hits:
        rr2, rr3 = tracer.pair(al_r, be_r)
        if max(abs(rr2) / scale2, abs(rr3) / scale3) > 1e-6:
            continue
        a0, b0, c0 = math.sin(al_r), math.sin(be_r), math.sin(al_r + be_r)
        k = v1 / _elem_scalar(k1, a0, b0, c0)
        tri = make_triangle(k * a0, k * b0, k * c0)
        if not any(congruent(tri, t, Tolerance(rel=1e-6, abs=1e-12)) for t in found):
            found.append(tri)
    return found


def root_count_scan(f, interval: tuple[float, float], n: int,
                    margin: float = 1e-9) -> int:
    """Sign changes of ``f`` across ``n`` uniform samples (margin-shrunk)."""
    if n < 10:
        raise ValueError("need at least 10 samples")
    lo, hi = shrink_interval(interval[0], interval[1], margin)
    values = []
    for i in range(n):
        x = lo + (hi - lo) * i / (n - 1)
        v = f(x)
        if not math.isfinite(v):
            raise NonFiniteEvaluation(x, v)
        values.append(v)
    return count_sign_changes(values)


@dataclass(frozen=True)
class Verdict:
    passed: bool
    diagnostics: tuple[str, ...]


def verify_report(report: SolveReport, rel_tol: float = 1e-8,
                  grid: GridSpec | None = None) -> Verdict:
    """Re-check a solve report from first principles.

    Every solution must reproduce all three prescribed elements from its
    side lengths alone; solutions must be pairwise non-congruent; and,
    when a grid is supplied, the solution count must match
    :func:`grid_enumerate`.
    """
    prescriptions = [*report.problem.fixed, report.problem.target]
    diags: list[str] = []
    for idx, sol in enumerate(report.solutions):
        for kind, value in prescriptions:
            got = element(sol.triangle, kind)
            err = abs(got - value) / max(abs(value), 1e-300)
            if err > rel_tol:
                diags.append(
                    f"solution {idx}: {kind.value} = {got!r}, prescribed "
                    f"{value!r} (rel err {err:.2e})")
    for i in range(len(report.solutions)):
        for j in range(i + 1, len(report.solutions)):
            if congruent(report.solutions[i].triangle,
                         report.solutions[j].triangle,
                         Tolerance(rel=1e-6, abs=1e-12)):
                diags.append(f"solutions {i} and {j} are congruent duplicates")
    if grid is not None:
        oracle_count = len(grid_enumerate(report.problem, grid))
        if oracle_count != report.count:
            diags.append(
                f"solver count {report.count} != oracle grid count {oracle_count}")
    return Verdict(passed=not diags, diagnostics=tuple(diags))
