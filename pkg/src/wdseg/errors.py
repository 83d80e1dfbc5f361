"""Exception taxonomy.

Everything a caller can trigger with bad input derives from DomainError;
the CLI maps that family to exit code 2 and the service to HTTP 400.
InternalInvariantError is different in kind: it marks an invariant the
implementation is supposed to uphold unconditionally, so seeing it means
a bug, never bad input (CLI exit 3, HTTP 500).
"""


class DomainError(ValueError):
    """Input is well-formed but mathematically invalid for the operation."""


class FieldMismatchError(DomainError):
    """Operands live over different coefficient fields."""


class SingularError(DomainError):
    """A matrix that must be invertible is singular."""


class NotNilpotentError(DomainError):
    """Matrix expected to be nilpotent is not."""


class NotUnipotentError(DomainError):
    """Matrix expected to be unipotent is not."""


class TwistRelationError(DomainError):
    """P, N and q fail the defining twist relation P N P^-1 = q^-1 N."""


class NotPIntegralError(DomainError):
    """Entry (or determinant) has p in a denominator where p-integrality is required."""


class WildCharacteristicError(DomainError):
    """Positive characteristic too small for the operation (need p > degree)."""


class NonSplitError(DomainError):
    """Characteristic polynomial does not split over the coefficient field."""


class CyclicLineError(DomainError):
    """Operation is defined on free integer-position lines, not on mod-o cycles."""


class WraparoundError(DomainError):
    """Segment longer than its cyclic line's period."""


class SearchBoundError(DomainError):
    """Explicit search bound exceeded (brute-force order oracle, down-sets)."""


class InternalInvariantError(RuntimeError):
    """A guaranteed invariant failed; indicates an implementation bug."""
