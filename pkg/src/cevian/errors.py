"""Exception hierarchy shared by all cevian modules."""

from __future__ import annotations


class CevianError(Exception):
    """Base class for all errors raised by this package."""


class NonPositiveSide(CevianError):
    """A side length is zero, negative, or not finite."""


class TriangleInequalityViolated(CevianError):
    """Side lengths violate the strict triangle inequality.

    ``which`` names the offending side (the one not shorter than the sum of
    the other two) and ``slack`` is ``other1 + other2 - side`` (<= 0 or
    numerically indistinguishable from 0).
    """

    def __init__(self, which: str, slack: float):
        self.which = which
        self.slack = slack
        super().__init__(
            f"side {which} is not strictly shorter than the sum of the other "
            f"two (slack {slack:.3e})"
        )


class DegenerateParameter(CevianError):
    """A family parameter sits at (or numerically too close to) a
    degenerate endpoint where no actual triangle exists."""


class InvalidScaleKind(CevianError):
    """An angle was passed where a length element is required to fix scale."""


class NonFiniteEvaluation(CevianError):
    """A scanned function returned NaN or infinity."""

    def __init__(self, parameter: float, value: float):
        self.parameter = parameter
        self.value = value
        super().__init__(f"non-finite value {value!r} at parameter {parameter!r}")


class NoConvergence(CevianError):
    """An iterative routine hit its iteration cap without meeting its
    convergence criterion."""


class InfeasibleSpec(CevianError):
    """The prescribed pair of elements admits no triangle family at all
    (e.g. a median shorter than half the companion height)."""


class UnsupportedPattern(CevianError):
    """The fixed-element pair (or its combination with the target kind) is
    outside the analyzed problem patterns."""
