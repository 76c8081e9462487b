"""Exception types raised by the library."""


class LectureHallError(Exception):
    """Base class for library errors."""


class CapExceeded(LectureHallError, ValueError):
    """An enumeration or degree guard was hit before any work started."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} = {size} exceeds cap {cap}")


class NotDivisible(LectureHallError, ArithmeticError):
    """Exact division left a remainder."""
