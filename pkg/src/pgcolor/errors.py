"""Exception types shared across the package."""


class PgError(Exception):
    """Base class for all library errors."""


class UnsupportedField(PgError):
    """Requested field order is not prime-power or outside the supported set."""


class Overflow(PgError):
    """Exact integer result exceeds the 128-bit contract."""


class SizeLimit(PgError):
    """Requested structure exceeds the configured line-count cap."""


class DivisibilityError(PgError):
    """Spread member dimension incompatible with the ambient dimension."""


class NotSkew(PgError):
    """Regulus input lines are not pairwise skew."""


class NotDim3(PgError):
    """Operation requires a 3-dimensional ambient space."""


class NotInduced(PgError):
    """A spread member meets the carrier subspace only partially."""


class NotGeometric(PgError):
    """Spread does not induce a spread in every span of two members."""


class NotRegular(PgError):
    """Spread is not closed under reguli of member triples."""


class BudgetExhausted(PgError):
    """Search node budget ran out; the search is inconclusive, not a disproof."""

    def __init__(self, message: str = "search budget exhausted", nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class UnsupportedSize(PgError):
    """Exhaustive enumeration requested beyond its supported size."""


class StructureInvalid(PgError):
    """Packing structure does not match the space it claims to partition."""


class NotComplete(PgError):
    """Coloring is not complete, so no color-count certificate exists."""


class OwnerClaimFalse(PgError):
    """A carrier point fails to own a claimed color."""


class ShapeError(PgError):
    """Dimension is not of the form 3*2^i - 1 required by the construction."""


class NotAlternating(PgError):
    """Matrix is not alternating (A = -A^T with zero diagonal)."""


class Singular(PgError):
    """Matrix is singular."""


class FrameMismatch(PgError):
    """Named point frame does not resolve consistently in the given space."""


class CertificateFormatError(PgError):
    """Certificate file is malformed or has an unexpected schema."""


class HashMismatch(PgError):
    """Certificate space descriptor hash does not match the rebuilt space."""
