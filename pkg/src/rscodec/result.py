"""Outcome of a decode attempt, shared by all decoders."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .poly import Poly


class FailureReason(str, Enum):
    NONZERO_REMAINDER = "NonzeroRemainder"
    DEGREE_OVERFLOW = "DegreeOverflow"
    LOCATOR_ROOT_MISMATCH = "LocatorRootMismatch"
    DISTANCE_EXCEEDED = "DistanceExceeded"
    KEY_EQUATION_UNSOLVABLE = "KeyEquationUnsolvable"


@dataclass
class DecodeResult:
    """Either a success (``reason is None``) or a typed failure.

    ``trace`` keeps the intermediate polynomials of the run (keys depend on the
    decoder) so callers can re-check the key equation after the fact.
    """

    message: list[int] | None = None
    codeword: list[int] | None = None
    error_locator: Poly | None = None
    corrected_positions: frozenset[int] = frozenset()
    reason: FailureReason | None = None
    trace: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return self.reason is None

    @classmethod
    def failure(cls, reason: FailureReason, **trace) -> "DecodeResult":
        return cls(reason=reason, trace=trace)

    def same_outcome(self, other: "DecodeResult") -> bool:
        if self.ok != other.ok:
            return False
        return not self.ok or self.message == other.message
