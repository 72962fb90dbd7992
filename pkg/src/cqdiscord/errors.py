"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the range an operation is defined on."""


class InvalidStateError(DomainError):
    """A matrix fails density-operator validation."""


class UnsupportedRegimeError(ValueError):
    """A closed-form routine was called outside the regime it covers."""


class DegenerateDomainError(ValueError):
    """The measurement constraint region collapses to a segment or a point."""
