"""Exception types shared across the package."""


class ModblocksError(Exception):
    """Base class for all package errors."""


class OrderLimitExceeded(ModblocksError):
    """A group or algebra is larger than the configured desk-scale bound."""


class DimensionMismatch(ModblocksError):
    """Vectors or matrices with incompatible ambient dimensions or fields."""


class NotCommutative(ModblocksError):
    """An operation requiring a commutative algebra received one that is not."""


class NotNormal(ModblocksError):
    """The given subgroup is not normal in its parent group."""


class NotNormalPSubgroup(NotNormal):
    """The given subgroup is not a normal p-subgroup for the relevant prime."""


class NotFixedBySubgroup(ModblocksError):
    """A relative trace was requested for an element outside the fixed-point
    subalgebra of the lower subgroup."""


class CrossCheckFailed(ModblocksError):
    """Two independent constructions of the same object disagree."""


class SpanMismatch(CrossCheckFailed):
    """A restricted spanning set failed to span the full ideal."""


class VerificationFailed(ModblocksError):
    """A built-in identity check failed; the message names the identity."""


class NotSymmetricQuotient(ModblocksError):
    """No valid form-carrying central element exists for the given quotient data."""


class NotAnIdeal(ModblocksError):
    """A subspace claimed to be an ideal fails its closure check."""


class RadicalMismatch(ModblocksError):
    """The supplied radical is inconsistent with the symmetrizing form
    (its form-orthogonal complement differs from its annihilator)."""


class FieldNotSplitting(ModblocksError):
    """The coefficient field does not split the algebra; raise the extension degree."""


class SplitFailure(ModblocksError):
    """Eigenspace refinement failed to separate all central characters
    within the retry budget."""


class DegreeRecoveryFailed(ModblocksError):
    """A recovered character degree failed its integrality or divisibility checks."""


class GroupFileError(ModblocksError):
    """A group or corpus file failed to parse; message carries the line number."""
