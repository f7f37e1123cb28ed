"""Exception hierarchy shared by every module."""


class SkewHoweError(Exception):
    pass


class DomainError(SkewHoweError, ValueError):
    """An argument lies outside the domain of the operation."""


class ContainmentError(DomainError):
    """A partition does not fit inside the given rectangle."""


class ResourceError(SkewHoweError, RuntimeError):
    """A configured size cap would be exceeded."""


class TheoremCheckFailure(SkewHoweError):
    """An identity that must hold exactly did not."""
