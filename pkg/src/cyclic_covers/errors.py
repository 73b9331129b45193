"""
Exception hierarchy.

Every error that signals bad mathematical input derives from
:class:`InvalidInput` (the CLI maps those to exit code 2); malformed
serialized data raises :class:`ParseError` (exit code 3).
"""


class InvalidInput(ValueError):
    """Base class for mathematically invalid input."""


class ParseError(ValueError):
    """Malformed serialized data (origami JSON, rational strings, ...)."""


# cover parameters

class CoverParamsError(InvalidInput):
    pass


class RangeViolation(CoverParamsError):
    pass


class GcdViolation(CoverParamsError):
    pass


class SumViolation(CoverParamsError):
    pass


class KOutOfRange(InvalidInput):
    pass


class NotLineBundle(InvalidInput):
    pass


class WrongTSum(InvalidInput):
    pass


class NoHolomorphicForm(InvalidInput):
    pass


class NotOddN(InvalidInput):
    pass


class NotAbelianCase(InvalidInput):
    pass


class InclusionViolation(RuntimeError):
    """A multiset difference was requested that is not defined.

    For :func:`cyclic_covers.spectra.minus_spectrum` this can only
    happen through a bug: the base spectrum is always contained in the
    spectrum of the double cover.
    """


# origamis

class OrigamiError(InvalidInput):
    pass


class NotPermutation(OrigamiError):
    pass


class LengthMismatch(OrigamiError):
    pass


class Disconnected(OrigamiError):
    pass


class NotAutomorphism(OrigamiError):
    pass


class OrbitTooLarge(RuntimeError):
    pass


class UnknownFormat(ValueError):
    pass
