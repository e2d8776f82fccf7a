"""Exception hierarchy.

Every library error carries a distinct process exit code so the CLI can
map failures one-to-one onto documented statuses.
"""


class LensforgeError(ValueError):
    exit_code = 1


class ParseError(LensforgeError):
    """Malformed command line."""
    exit_code = 2


class InvalidInput(LensforgeError):
    exit_code = 3


class NonManifoldInput(LensforgeError):
    """(n, q) not coprime: the gluing curve would not be simple."""
    exit_code = 4


class NotInvertible(LensforgeError):
    exit_code = 5


class NonPrimitiveCurve(LensforgeError):
    exit_code = 6


class MalformedMatrix(LensforgeError):
    exit_code = 7


class Degenerate(LensforgeError):
    exit_code = 8


class InvalidDegree(LensforgeError):
    exit_code = 9


class BoundTooSmall(LensforgeError):
    exit_code = 10


class NotApplicable(LensforgeError):
    exit_code = 11


class BoundTooLarge(LensforgeError):
    exit_code = 12


ALL_ERRORS = (
    ParseError,
    InvalidInput,
    NonManifoldInput,
    NotInvertible,
    NonPrimitiveCurve,
    MalformedMatrix,
    Degenerate,
    InvalidDegree,
    BoundTooSmall,
    NotApplicable,
    BoundTooLarge,
)
