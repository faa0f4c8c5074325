"""Exception types shared across the package."""


class GainOffsetError(Exception):
    """Base class for every error raised by this package."""


class ConstantWordError(GainOffsetError):
    """A constant word was given where a word with nonzero deviation is required."""


class ConstantCodeword(GainOffsetError):
    """A constant codeword reached a decoder objective that cannot score it."""


class ConstantReceivedWord(GainOffsetError):
    """A constant received word reached a measure that is undefined for it."""


class EnumerationTooLarge(GainOffsetError):
    """Full enumeration of the alphabet would exceed the safety cap."""


class NotPermutationClosed(GainOffsetError):
    """Orbit representatives were requested for a code that is not permutation closed."""


class StructureMissing(GainOffsetError):
    """Accelerated decoding was requested without the closure structure it needs."""


class CodeTooSmall(GainOffsetError):
    """The operation needs a code with at least two codewords."""
