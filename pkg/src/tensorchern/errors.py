class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class InvariantViolation(RuntimeError):
    """A value that must hold by construction did not; always a bug."""


class OracleLimitError(RuntimeError):
    """The brute-force oracle exceeded its configured term budget."""
