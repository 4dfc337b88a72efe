"""Exception hierarchy.

Two families matter to callers: PreconditionError means the inputs violated a
documented mathematical precondition (CLI exit code 3), InternalError means a
computation broke one of its own invariants (CLI exit code 4).
"""


class PadicFFTError(Exception):
    pass


class PreconditionError(PadicFFTError):
    pass


class InternalError(PadicFFTError):
    pass


class NonUnit(PreconditionError):
    """Element is divisible by p, so it has no inverse in Z/p^K."""


class ParentMismatch(PreconditionError):
    """Operands belong to different rings."""


class NotCoprime(PreconditionError):
    """gcd(s, p) != 1 where coprimality is required."""


class ZeroInput(PreconditionError):
    pass


class OutOfRange(PreconditionError):
    pass


class BadInput(PreconditionError):
    pass


class DegreeTooSmall(PreconditionError):
    pass


class EvenCharacteristic(PreconditionError):
    """Equal-degree splitting needs an odd field order."""


class EvenPrime(PreconditionError):
    """p = 2 is outside the supported (odd, unramified) regime."""


class NotAFactor(PreconditionError):
    """Polynomial does not divide the target modulo p."""


class NotCoprimeFactors(PreconditionError):
    """The two residue factors share a root mod p."""


class BezoutFailure(PreconditionError):
    """Supplied Bezout pair does not satisfy a*f + b*g = 1 mod p."""


class PreconditionFailed(PreconditionError):
    """A stated congruence precondition does not hold."""


class RootNotPrimitive(PreconditionError):
    """Claimed s-th root of unity has order < s."""


class PrecisionTooLow(PreconditionError):
    """Lift carries fewer p-adic digits than the transform needs."""


class LengthMismatch(PreconditionError):
    pass


class DegreeOverflow(PreconditionError):
    """Product degree does not fit below the transform length."""


class FactoringFailure(PreconditionError):
    """Integer factorization gave up (input beyond desk scale)."""


class FileFormatError(PadicFFTError):
    """Input file does not follow the text format (CLI exit code 2)."""


class OrbitNotClosed(InternalError):
    """Frobenius orbit failed to close or produced a non-rational coefficient."""


class CoefficientNotRational(InternalError):
    """Expanded orbit product has a coefficient outside Z/p^K."""


class RandomnessFailure(InternalError):
    """Randomized splitting exceeded its retry budget."""
