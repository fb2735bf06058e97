"""Exception hierarchy shared by every module of the package."""


class LrcError(Exception):
    """Base class for all errors raised by elliptic_lrc."""


# finite fields
class NotPrime(LrcError, ValueError):
    pass


class TooLarge(LrcError, ValueError):
    pass


class DivisionByZero(LrcError, ZeroDivisionError):
    pass


class MixedFields(LrcError, TypeError):
    pass


class DegenerateAllZero(LrcError, ValueError):
    pass


# curves
class SingularCurve(LrcError, ValueError):
    pass


class HasseWeilViolation(LrcError, AssertionError):
    pass


class PointNotOnCurve(LrcError, ValueError):
    pass


class NotASquare(LrcError, ValueError):
    pass


class UnsupportedCharacteristic(LrcError, ValueError):
    pass


class CatalogVerificationFailed(LrcError, AssertionError):
    pass


# automorphisms
class UnsupportedShape(LrcError, ValueError):
    pass


class ShapeMismatch(LrcError, ValueError):
    pass


# function field
class ZeroInverse(LrcError, ZeroDivisionError):
    pass


class ZeroFunction(LrcError, ValueError):
    pass


class NonRationalSupport(LrcError, ValueError):
    pass


class DimensionMismatch(LrcError, AssertionError):
    pass


class NotFound(LrcError, AssertionError):
    pass


class NotSplit(LrcError, ValueError):
    pass


class NotInvariant(LrcError, AssertionError):
    pass


# codes
class RangeError(LrcError, ValueError):
    pass


class NoQualifyingSubgroup(LrcError, ValueError):
    pass


class SubmatrixSingular(LrcError, AssertionError):
    pass


class LengthMismatch(LrcError, ValueError):
    pass


class NotRepairable(LrcError, ValueError):
    pass


class MissingProvenance(LrcError, ValueError):
    pass


# shard I/O
class MissingShards(LrcError, FileNotFoundError):
    pass


class IndexOutOfRange(LrcError, IndexError):
    pass


class MalformedArtifact(LrcError, ValueError):
    pass
