"""Exceptions raised across the toolkit."""


class KeyPieriError(Exception):
    """Base class for all domain errors."""
    pass


class InvalidComposition(KeyPieriError):
    """A composition, permutation, row index or row sequence is malformed."""
    pass


class NotMember(KeyPieriError):
    """A diagram lies outside the space an operation requires."""
    pass


class NotGenericDiagram(KeyPieriError):
    """A diagram is not a generic Kohnert diagram."""
    pass


class UnsupportedCase(KeyPieriError):
    """No nonnegative Pieri formula applies to the given input."""
    pass


class CapExceeded(KeyPieriError):
    """An enumeration grew past its configured cap."""

    def __init__(self, size: int, cap: int, what: str = "enumeration"):
        self.size = size
        self.cap = cap
        self.what = what
        super().__init__(f"{what} exceeded cap: reached {size} > {cap}")
