"""Semantic exception hierarchy shared by all modules.

Every domain failure derives from :class:`DomainError` so that callers (in
particular the CLI) can distinguish bad inputs from programming errors.
"""


class DomainError(Exception):
    """Base class for all input and invariant violations."""


# --- distributions -----------------------------------------------------------

class NegativeMassError(DomainError):
    pass


class StoredZeroMassError(DomainError):
    pass


class MassNotOneError(DomainError):
    pass


class ArityMismatchError(DomainError):
    pass


class IndexOutOfRangeError(DomainError):
    pass


class EmptySubsetError(DomainError):
    pass


class UnknownVariableError(DomainError):
    pass


class ZeroProbabilityError(DomainError):
    pass


class NameCollisionError(DomainError):
    pass


class FunctionRangeError(DomainError):
    pass


class WeightsNotOneError(DomainError):
    pass


class SchemaMismatchError(DomainError):
    pass


class OverlappingSetsError(DomainError):
    pass


class DuplicateVariableError(DomainError):
    pass


# --- CI structures and polymatroids ------------------------------------------

class UnknownRuleError(DomainError):
    pass


class MixedGroundSetsError(DomainError):
    pass


class NotMeetClosedError(DomainError):
    pass


class NotMonotoneError(DomainError):
    pass


class NotSubmodularError(DomainError):
    pass


class DimensionMismatchError(DomainError):
    pass


# --- families -----------------------------------------------------------------

class InvalidMassesError(DomainError):
    pass


class BadParameterError(DomainError):
    pass


class DecompositionMismatchError(DomainError):
    pass


class NotRankOneError(DomainError):
    pass


# --- file handling --------------------------------------------------------------

class FileFormatError(DomainError):
    pass
