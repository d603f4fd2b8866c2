from typing import Optional


class QFormLabError(Exception):
    """Base class for every error raised by qformlab.

    ``exit_code`` is the process status the CLI reports for the error.
    """

    exit_code = 1


class InputError(QFormLabError, ValueError):
    exit_code = 2


class NotADiscriminant(InputError):
    pass


class NotFundamental(InputError):
    pass


class WrongResidue(InputError):
    pass


class NotApplicable(InputError):
    pass


class DiscriminantMismatch(InputError):
    pass


class NonIntegralLead(InputError):
    pass


class ConfigurationError(InputError):
    pass


class FixtureError(InputError):
    pass


class VerificationError(QFormLabError, ArithmeticError):
    exit_code = 3


class IntegralityViolation(VerificationError):
    pass


class NonIntegralResult(VerificationError):
    pass


class ValidationFailure(VerificationError):
    def __init__(self, message: str, index: Optional[int] = None, n: Optional[int] = None,
                 expected: Optional[int] = None, got: Optional[int] = None):
        super().__init__(message)
        self.index = index
        self.n = n
        self.expected = expected
        self.got = got
