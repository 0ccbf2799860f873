class GroupError(Exception):
    """Base class for errors raised by the group engine."""


class DegreeMismatch(GroupError):
    pass


class CapExceeded(GroupError):
    """An enumeration grew past its configured size limit."""

    def __init__(self, what, cap):
        self.what = what
        self.cap = cap
        super().__init__(f"{what} exceeds cap of {cap}")


class NotInGroup(GroupError):
    pass


class SpecError(ValueError):
    """Malformed user input (group spec, element text, config file)."""
