"""Exception hierarchy.

Every error raised by the library derives from :class:`SegreError`, which is a
``ValueError`` so that callers validating user input can catch either.
"""


class SegreError(ValueError):
    pass


class LengthMismatchError(SegreError):
    """Amplitude count or word length does not match what was declared."""


class NotNormalizedError(SegreError):
    pass


class NonFiniteError(SegreError):
    pass


class IndexOutOfRangeError(SegreError, IndexError):
    pass


class NotHermitianError(SegreError):
    pass


class DimMismatchError(SegreError):
    pass


class CutOutOfRangeError(SegreError):
    pass


class NotRankOneError(SegreError):
    """Factor recovery requested at a cut where the state is entangled."""


class WrongArityError(SegreError):
    """Operation is only defined for a specific number of qubits."""


class OddArityError(WrongArityError):
    pass


class SizeMismatchError(SegreError):
    pass


class AmbiguousOnWallError(SegreError):
    """The state sits on a reflection wall, so its chamber is not unique."""

    def __init__(self, message, pairs=()):
        super().__init__(message)
        self.pairs = tuple(pairs)


class OverflowGuardError(SegreError):
    """Refusing to materialise a graph above the vertex-count cap."""


class StateFileError(SegreError):
    """A state file could not be parsed."""
