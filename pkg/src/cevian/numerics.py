"""Bracketed root finding, root counting and extremum location for scalar
functions of one parameter on an open interval.

Endpoints are never evaluated: every scan shrinks the interval by
``endpoint_margin`` (a fraction of its width) because the family curves in
this package degenerate, or blow up, exactly at their endpoints.  All
routines are deterministic for fixed inputs: fixed iteration caps, fixed
sampling, roots reported leftmost first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal, Sequence

from .errors import NoConvergence, NonFiniteEvaluation

_EPS = math.ulp(1.0)
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
MAX_ITER = 200


@dataclass(frozen=True)
class Bracket:
    """An interval with a guaranteed sign change of the scanned function."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError("bracket requires lo < hi")
        if not (self.f_lo < 0.0 < self.f_hi or self.f_hi < 0.0 < self.f_lo):
            raise ValueError("bracket requires strictly opposite signs")


@dataclass(frozen=True)
class ScanConfig:
    """Sampling density and tolerances for scans and refinements."""

    samples: int = 4096
    param_tol: float = 1e-12
    residual_tol: float = 1e-10
    endpoint_margin: float = 1e-9

    def __post_init__(self) -> None:
        if self.samples < 16:
            raise ValueError("samples must be >= 16")
        if not (self.param_tol > 0 and self.residual_tol > 0):
            raise ValueError("tolerances must be positive")
        if not 0.0 < self.endpoint_margin < 0.01:
            raise ValueError("endpoint_margin must lie in (0, 0.01)")


def shrink_interval(lo: float, hi: float, margin: float) -> tuple[float, float]:
    """Pull both endpoints inward by ``margin`` times the width."""
    width = hi - lo
    return lo + margin * width, hi - margin * width


def _eval_checked(f: Callable[[float], float], x: float) -> float:
    v = f(x)
    if not math.isfinite(v):
        raise NonFiniteEvaluation(x, v)
    return v


def find_brackets(f: Callable[[float], float], interval: tuple[float, float],
                  cfg: ScanConfig = ScanConfig()) -> list[Bracket]:
    """Uniform scan for sign changes on the margin-shrunk interval.

    Returns disjoint brackets ordered left to right, each containing at
    least one root.  A sample that is exactly zero is folded into a bracket
    spanning its neighbours when their signs differ.
    """
    lo, hi = shrink_interval(interval[0], interval[1], cfg.endpoint_margin)
    n = cfg.samples
    xs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    fs = [_eval_checked(f, x) for x in xs]

    out: list[Bracket] = []
    i = 0
    while i < n - 1:
        f0, f1 = fs[i], fs[i + 1]
        if f0 == 0.0:
            # zero exactly on a grid point: bridge to the nearest nonzero
            # neighbours; skip if the function only touches zero
            j = i - 1
            while j >= 0 and fs[j] == 0.0:
                j -= 1
            k = i + 1
            while k < n and fs[k] == 0.0:
                k += 1
            if j >= 0 and k < n and (fs[j] < 0.0 < fs[k] or fs[k] < 0.0 < fs[j]):
                out.append(Bracket(xs[j], xs[k], fs[j], fs[k]))
            i = k
            continue
        if f0 * f1 < 0.0:
            out.append(Bracket(xs[i], xs[i + 1], f0, f1))
        i += 1
    return out


def refine_root(f: Callable[[float], float], b: Bracket,
                cfg: ScanConfig = ScanConfig(), scale: float | None = None) -> float:
    """Brent-style refinement of a bracketed root.

    Succeeds when ``|f(x)| <= residual_tol * scale`` or the bracket width
    falls below ``param_tol`` (plus unavoidable ulp slack); the bisection
    fallback inside Brent's update guarantees progress.  ``scale`` defaults
    to the larger endpoint magnitude of ``f``.
    """
    if scale is None:
        scale = max(abs(b.f_lo), abs(b.f_hi))
    f_tol = cfg.residual_tol * max(scale, 1e-300)

    a, x = b.lo, b.hi
    fa, fx = b.f_lo, b.f_hi
    c, fc = a, fa
    d = e = x - a

    for _ in range(MAX_ITER):
        if (fx > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = x - a
        if abs(fc) < abs(fx):
            a, x, c = x, c, x
            fa, fx, fc = fx, fc, fx
        tol1 = 2.0 * _EPS * abs(x) + 0.5 * cfg.param_tol
        xm = 0.5 * (c - x)
        if abs(xm) <= tol1 or fx == 0.0 or abs(fx) <= f_tol:
            return x
        if abs(e) >= tol1 and abs(fa) > abs(fx):
            s = fx / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fx / fc
                p = s * (2.0 * xm * q * (q - r) - (x - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = x, fx
        x += d if abs(d) > tol1 else (tol1 if xm > 0 else -tol1)
        fx = f(x)
        if not math.isfinite(fx):
            raise NonFiniteEvaluation(x, fx)

    raise NoConvergence(f"root refinement exceeded {MAX_ITER} iterations")


ExtremumKind = Literal["min", "max"]


def _golden_section(f: Callable[[float], float], lo: float, hi: float,
                    find_max: bool, param_tol: float) -> tuple[float, float]:
    sign = -1.0 if find_max else 1.0
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1 = sign * _eval_checked(f, x1)
    f2 = sign * _eval_checked(f, x2)
    for _ in range(MAX_ITER):
        if hi - lo <= param_tol * (1.0 + abs(lo) + abs(hi)):
            break
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = sign * _eval_checked(f, x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = sign * _eval_checked(f, x2)
    x = 0.5 * (lo + hi)
    return x, _eval_checked(f, x)


def find_extrema(f: Callable[[float], float], interval: tuple[float, float],
                 cfg: ScanConfig = ScanConfig()) -> list[tuple[float, float, ExtremumKind]]:
    """Interior local extrema on the margin-shrunk interval.

    Sign changes of the sampled slope flag candidate intervals, each then
    polished by golden-section search.  Constant stretches yield nothing.
    """
    lo, hi = shrink_interval(interval[0], interval[1], cfg.endpoint_margin)
    n = cfg.samples
    xs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    fs = [_eval_checked(f, x) for x in xs]

    out: list[tuple[float, float, ExtremumKind]] = []
    last_sign = 0
    last_idx = 0
    for i in range(n - 1):
        diff = fs[i + 1] - fs[i]
        s = (diff > 0) - (diff < 0)
        if s == 0:
            continue
        if last_sign != 0 and s != last_sign:
            kind: ExtremumKind = "max" if last_sign > 0 else "min"
            x, v = _golden_section(f, xs[last_idx], xs[i + 1], kind == "max",
                                   cfg.param_tol)
            out.append((x, v, kind))
        last_sign = s
        last_idx = i
    return out


def root_on_monotone_piece(f: Callable[[float], float], lo: float, hi: float,
                           cfg: ScanConfig, scale: float | None = None,
                           f_lo: float | None = None,
                           f_hi: float | None = None) -> float | None:
    """Root of a function known to be monotone on [lo, hi], or None when the
    endpoint values do not straddle zero.  Endpoint values may be supplied
    to avoid re-evaluation."""
    if f_lo is None:
        f_lo = _eval_checked(f, lo)
    if f_hi is None:
        f_hi = _eval_checked(f, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo < 0.0) == (f_hi < 0.0):
        return None
    return refine_root(f, Bracket(lo, hi, f_lo, f_hi), cfg, scale=scale)


def extrapolate_to_zero(f: Callable[[float], float], t0: float,
                        ratio: float = 0.5, points: int = 4) -> float:
    """Polynomial (Neville) extrapolation of ``f(t)`` to ``t -> 0`` from
    samples at ``t0 * ratio**k``.  Used for endpoint limits of family
    sweeps, where the endpoint itself is degenerate."""
    ts = [t0 * ratio ** k for k in range(points)]
    vals = [_eval_checked(f, t) for t in ts]
    for level in range(1, points):
        for i in range(points - level):
            num = ts[i] * vals[i + 1] - ts[i + level] * vals[i]
            vals[i] = num / (ts[i] - ts[i + level])
    return vals[0]


def count_sign_changes(values: Sequence[float]) -> int:
    """Number of strict sign alternations in a sequence (zeros skipped)."""
    count = 0
    last = 0
    for v in values:
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if last != 0 and s != last:
            count += 1
        last = s
    return count
