class FockShiftError(ValueError):
    """Base class for all errors raised by fockshift."""


class AlphabetError(FockShiftError):
    pass


class DimensionMismatch(FockShiftError):
    pass


class TruncationError(FockShiftError):
    pass


class WeightError(FockShiftError):
    pass


class NotBoundedBelow(FockShiftError):
    """Raised when a weight needed for inversion vanishes.

    ``letter`` and ``word`` identify the offending weight lambda_{letter, word}.
    """

    def __init__(self, letter, word):
        self.letter = letter
        self.word = word
        super().__init__(f"weight ({letter}, {word}) is zero; shift is not bounded below")


class DivisibilityError(FockShiftError):
    pass


class ConfigError(FockShiftError):
    pass
