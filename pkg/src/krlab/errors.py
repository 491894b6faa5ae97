"""Exception types shared across modules."""


class KrlabError(Exception):
    """Base class for library errors."""


class OutOfScope(KrlabError):
    """The request is well formed but no executable model exists for it."""


class AssumptionViolation(KrlabError):
    """A runtime-checked structural assumption failed on a concrete crystal."""


class AlignmentError(KrlabError):
    """A virtual crystal operator applied only part of its ambient factorization."""


class IntegrityError(KrlabError):
    """An internal consistency check failed; the computed object would be wrong."""
