"""Exact-formula triangle kernel.

Labeling follows the classical convention: side ``a`` is BC (opposite
vertex A), ``b`` is CA (opposite B), ``c`` is AB (opposite C); ``alpha``,
``beta``, ``gamma`` are the interior angles at A, B, C in radians.  The
fifteen prescribable elements are the three sides, three angles, three
heights ``h_x``, three medians ``m_x`` and three interior-bisector
segments ``l_x``, each cevian dropped from the named vertex.

All lengths are dimensionless positive doubles.  Angles are always derived
from the sides via the law of cosines (arguments clamped to [-1, 1]), so a
``Triangle`` has a single source of truth.  Near-degenerate needle
triangles are handled with the usual care: the area uses the stable sorted
product form and cevian formulas avoid raw ``(b + c)**2 - a**2`` style
cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DegenerateParameter,
    InvalidScaleKind,
    NonPositiveSide,
    TriangleInequalityViolated,
)

# Relative slack below which a side triple is treated as degenerate.  Sweeps
# that need values arbitrarily close to a degenerate fold evaluate closed
# forms directly instead of materializing a Triangle.
DEGENERACY_EPS = 1e-15


class ElementKind(Enum):
    """The fifteen prescribable triangle elements."""

    SIDE_A = "a"
    SIDE_B = "b"
    SIDE_C = "c"
    ANGLE_A = "alpha"
    ANGLE_B = "beta"
    ANGLE_C = "gamma"
    HEIGHT_A = "h_a"
    HEIGHT_B = "h_b"
    HEIGHT_C = "h_c"
    MEDIAN_A = "m_a"
    MEDIAN_B = "m_b"
    MEDIAN_C = "m_c"
    BISECTOR_A = "l_a"
    BISECTOR_B = "l_b"
    BISECTOR_C = "l_c"

    @property
    def is_angle(self) -> bool:
        return self in (ElementKind.ANGLE_A, ElementKind.ANGLE_B, ElementKind.ANGLE_C)

    @property
    def is_length(self) -> bool:
        return not self.is_angle

    @property
    def vertex(self) -> str:
        """Vertex label ('A', 'B' or 'C') the element is attached to."""
        if self.value in ("alpha", "beta", "gamma"):
            return {"alpha": "A", "beta": "B", "gamma": "C"}[self.value]
        return self.value[-1].upper()

    def swapped_ab(self) -> "ElementKind":
        """The element this one maps to under relabeling A <-> B."""
        return _AB_SWAP[self]

    @classmethod
    def from_code(cls, code: str) -> "ElementKind":
        """Parse flexible spellings like 'la', 'l_a', 'hb', 'gamma', 'b'."""
        key = code.strip().lower().replace("_", "")
        try:
            return _CODE_TABLE[key]
        except KeyError:
            raise ValueError(f"unknown element code {code!r}") from None


_AB_SWAP = {
    ElementKind.SIDE_A: ElementKind.SIDE_B,
    ElementKind.SIDE_B: ElementKind.SIDE_A,
    ElementKind.SIDE_C: ElementKind.SIDE_C,
    ElementKind.ANGLE_A: ElementKind.ANGLE_B,
    ElementKind.ANGLE_B: ElementKind.ANGLE_A,
    ElementKind.ANGLE_C: ElementKind.ANGLE_C,
    ElementKind.HEIGHT_A: ElementKind.HEIGHT_B,
    ElementKind.HEIGHT_B: ElementKind.HEIGHT_A,
    ElementKind.HEIGHT_C: ElementKind.HEIGHT_C,
    ElementKind.MEDIAN_A: ElementKind.MEDIAN_B,
    ElementKind.MEDIAN_B: ElementKind.MEDIAN_A,
    ElementKind.MEDIAN_C: ElementKind.MEDIAN_C,
    ElementKind.BISECTOR_A: ElementKind.BISECTOR_B,
    ElementKind.BISECTOR_B: ElementKind.BISECTOR_A,
    ElementKind.BISECTOR_C: ElementKind.BISECTOR_C,
}

_CODE_TABLE = {k.value.replace("_", ""): k for k in ElementKind}
_CODE_TABLE.update({"ta": ElementKind.BISECTOR_A, "tb": ElementKind.BISECTOR_B,
                    "tc": ElementKind.BISECTOR_C})


@dataclass(frozen=True)
class Tolerance:
    """Relative/absolute tolerance pair for length comparisons."""

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self) -> None:
        if not (self.rel > 0 and self.abs > 0):
            raise ValueError("tolerances must be positive")


def _clamp_unit(x: float) -> float:
    return -1.0 if x < -1.0 else (1.0 if x > 1.0 else x)


def _angle_from_sides(opp: float, s1: float, s2: float) -> float:
    return math.acos(_clamp_unit((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2)))


def cevian_excess(opp: float, s1: float, s2: float) -> float:
    """``s1 + s2 - opp`` evaluated without cancellation blow-up.

    When ``opp`` is nearly the sum of the other two sides, ``opp - max``
    is exact (Sterbenz) and the remaining subtraction is correctly
    rounded, so the tiny result keeps full relative accuracy.
    """
    hi, lo = (s1, s2) if s1 >= s2 else (s2, s1)
    if opp >= hi:
        return lo - (opp - hi)
    return (s1 + s2) - opp


def triangle_area(a: float, b: float, c: float) -> float:
    """Area from sides, stable for needle-like triangles.

    Uses the sorted four-factor product (x >= y >= z required by the
    parenthesization, enforced here).
    """
    x, y, z = sorted((a, b, c), reverse=True)
    s = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))
    return 0.25 * math.sqrt(max(0.0, s))


def height_from_sides(opp: float, a: float, b: float, c: float) -> float:
    return 2.0 * triangle_area(a, b, c) / opp


def median_from_sides(opp: float, s1: float, s2: float) -> float:
    """Median to side ``opp``: rearrangement of 2*s1^2 + 2*s2^2 - opp^2 that
    stays accurate when ``opp`` nearly equals ``s1 + s2``."""
    rad = (s1 - s2) ** 2 + (s1 + s2 + opp) * cevian_excess(opp, s1, s2)
    return 0.5 * math.sqrt(max(0.0, rad))


def bisector_from_sides(opp: float, s1: float, s2: float) -> float:
    """Interior bisector to side ``opp``: sqrt(s1*s2*[1 - opp^2/(s1+s2)^2])
    in the factored form that survives near-degeneracy."""
    total = s1 + s2
    rad = s1 * s2 * (total + opp) * cevian_excess(opp, s1, s2)
    return math.sqrt(max(0.0, rad)) / total


def bisector_from_angles_factor(opp_angle: float, a1: float, a2: float) -> float:
    """Bisector to the side opposite ``opp_angle`` for the unit-circumdiameter
    shape with the other two angles ``a1``, ``a2`` (law-of-sines sides)."""
    s1, s2 = math.sin(a1), math.sin(a2)
    return 2.0 * s1 * s2 * math.cos(0.5 * opp_angle) / (s1 + s2)


@dataclass(frozen=True)
class Triangle:
    """An immutable labeled triangle given by its three side lengths.

    Construct through :func:`make_triangle` (validates positivity and the
    strict triangle inequality); every other element is derived on demand.
    """

    a: float
    b: float
    c: float

    # -- angles ---------------------------------------------------------

    @property
    def alpha(self) -> float:
        return _angle_from_sides(self.a, self.b, self.c)

    @property
    def beta(self) -> float:
        return _angle_from_sides(self.b, self.a, self.c)

    @property
    def gamma(self) -> float:
        return _angle_from_sides(self.c, self.a, self.b)

    # -- cevians ---------------------------------------------------------

    @property
    def area(self) -> float:
        return triangle_area(self.a, self.b, self.c)

    @property
    def h_a(self) -> float:
        return height_from_sides(self.a, self.a, self.b, self.c)

    @property
    def h_b(self) -> float:
        return height_from_sides(self.b, self.a, self.b, self.c)

    @property
    def h_c(self) -> float:
        return height_from_sides(self.c, self.a, self.b, self.c)

    @property
    def m_a(self) -> float:
        return median_from_sides(self.a, self.b, self.c)

    @property
    def m_b(self) -> float:
        return median_from_sides(self.b, self.a, self.c)

    @property
    def m_c(self) -> float:
        return median_from_sides(self.c, self.a, self.b)

    @property
    def l_a(self) -> float:
        return bisector_from_sides(self.a, self.b, self.c)

    @property
    def l_b(self) -> float:
        return bisector_from_sides(self.b, self.a, self.c)

    @property
    def l_c(self) -> float:
        return bisector_from_sides(self.c, self.a, self.b)

    @property
    def perimeter(self) -> float:
        return self.a + self.b + self.c

    def sorted_sides(self) -> tuple[float, float, float]:
        s = sorted((self.a, self.b, self.c))
        return (s[0], s[1], s[2])

    def scaled(self, k: float) -> "Triangle":
        return Triangle(k * self.a, k * self.b, k * self.c)

    def swapped_ab(self) -> "Triangle":
        """Relabel vertices A <-> B (sides a and b trade places)."""
        return Triangle(self.b, self.a, self.c)


def make_triangle(a: float, b: float, c: float) -> Triangle:
    """Validated Triangle constructor.

    Raises :class:`NonPositiveSide` for non-finite or non-positive sides and
    :class:`TriangleInequalityViolated` when a side fails to be strictly
    shorter than the sum of the other two by at least ``DEGENERACY_EPS``
    relative slack.
    """
    for name, s in (("a", a), ("b", b), ("c", c)):
        if not (isinstance(s, (int, float)) and math.isfinite(s) and s > 0):
            raise NonPositiveSide(f"side {name} must be a positive finite number, got {s!r}")
    scale = max(a, b, c)
    for name, opp, s1, s2 in (("a", a, b, c), ("b", b, a, c), ("c", c, a, b)):
        slack = cevian_excess(opp, s1, s2)
        if slack <= DEGENERACY_EPS * scale:
            raise TriangleInequalityViolated(name, slack)
    return Triangle(float(a), float(b), float(c))


def element(t: Triangle, kind: ElementKind) -> float:
    """Value of the named element: a length, or an angle in radians."""
    return getattr(t, kind.value)


def triangle_from_heights_gamma(h_a: float, h_b: float, gamma: float,
                                eps: float = 1e-12) -> Triangle:
    """Triangle with prescribed heights from A and B and angle at C.

    Sides follow from ``a = h_b/sin(gamma)``, ``b = h_a/sin(gamma)`` and the
    law of cosines; every ``gamma`` in the open interval (0, pi) yields a
    valid triangle, degenerating at both endpoints.
    """
    if not (h_a > 0 and h_b > 0 and math.isfinite(h_a) and math.isfinite(h_b)):
        raise NonPositiveSide(f"heights must be positive finite, got {h_a!r}, {h_b!r}")
    if not (eps < gamma < math.pi - eps):
        raise DegenerateParameter(f"gamma {gamma!r} outside ({eps}, pi - {eps})")
    s = math.sin(gamma)
    a = h_b / s
    b = h_a / s
    # c via (a-b)^2 + 4ab sin^2(gamma/2): no cancellation at either endpoint
    half = math.sin(0.5 * gamma)
    c = math.hypot(a - b, 2.0 * math.sqrt(a * b) * half)
    try:
        return make_triangle(a, b, c)
    except TriangleInequalityViolated as exc:
        raise DegenerateParameter(
            f"gamma {gamma!r} yields a numerically degenerate triangle"
        ) from exc


def triangle_from_angles(alpha: float, beta: float, scale_kind: ElementKind,
                         scale_value: float, eps: float = 1e-12) -> Triangle:
    """Triangle with prescribed angles at A and B, scaled so that
    ``element(scale_kind) == scale_value``.

    The shape comes from the law of sines (sides proportional to the sines
    of the opposite angles); ``scale_kind`` must be a length element.
    """
    if scale_kind.is_angle:
        raise InvalidScaleKind(f"{scale_kind} cannot fix the scale of a triangle")
    if not (scale_value > 0 and math.isfinite(scale_value)):
        raise NonPositiveSide(f"scale value must be positive finite, got {scale_value!r}")
    gamma = math.pi - alpha - beta
    if alpha < eps or beta < eps or gamma < eps:
        raise DegenerateParameter(
            f"angles ({alpha!r}, {beta!r}) leave no room for a triangle"
        )
    shape = make_triangle(math.sin(alpha), math.sin(beta), math.sin(gamma))
    k = scale_value / element(shape, scale_kind)
    return shape.scaled(k)


def congruent(t1: Triangle, t2: Triangle, tol: Tolerance = Tolerance()) -> bool:
    """True iff the sorted side triples agree within ``tol`` (relative to
    the mean perimeter, so congruence is scale invariant)."""
    scale = 0.5 * (t1.perimeter + t2.perimeter)
    limit = tol.rel * scale + tol.abs
    return all(
        abs(x - y) <= limit for x, y in zip(t1.sorted_sides(), t2.sorted_sides())
    )
