"""Exception hierarchy shared by the library and the command line.

Every error carries the process exit code the CLI reports for it:
2 for malformed input, 1 for domain guards and consistency failures.
"""


class WmodError(Exception):
    exit_code = 1


# ----- malformed input (exit 2) -----
class InputError(WmodError, ValueError):
    exit_code = 2


class EmptyInput(InputError):
    pass


class NonCoprime(InputError):
    pass


class NegativeInput(InputError):
    pass


class NotAMember(InputError):
    pass


class NotPrime(InputError):
    pass


class OutOfRange(InputError):
    pass


class BoundExceeded(InputError):
    pass


# ----- domain guards (exit 1) -----
class GuardError(WmodError):
    exit_code = 1


class GenusZero(GuardError):
    pass


class NotSymmetric(GuardError):
    pass


class Hyperelliptic(GuardError):
    pass


class NotCompleteIntersection(GuardError):
    pass


class GuardViolation(GuardError):

    def __init__(self, reason: str, message: str = None):
        self.reason = reason
        super().__init__(message or f"canonical-model guard violated: {reason}")


class ExcludedTarget(GuardError):
    pass


class DegenerateNormalization(GuardError):
    pass


# ----- internal consistency (exit 1) -----
class ConsistencyError(WmodError, RuntimeError):
    exit_code = 1


class NonVanishingTail(ConsistencyError):
    pass


class NoCertificate(ConsistencyError):
    pass


class NonZeroResidue(ConsistencyError):
    pass


class WmodWarning(UserWarning):
    """Domain caveat that does not stop a computation; reports carry it too."""
