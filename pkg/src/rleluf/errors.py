"""Exception types shared across the package."""


class LufError(Exception):
    """Base class for all rleluf errors."""


class EmptyInputError(LufError):
    pass


class InvalidSymbolError(LufError):
    pass


class PositionOutOfRangeError(LufError):
    pass


class OffsetOutOfRangeError(LufError):
    pass


class BudgetExceededError(LufError):
    """A materialization or oracle budget would be exceeded."""


class DecodeTooLargeError(BudgetExceededError):
    pass


class GridBoundsError(LufError):
    pass


class StageRangeError(LufError):
    pass


class ParseError(LufError):
    pass
