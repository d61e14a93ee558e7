"""Exception hierarchy shared by every module."""


class HopfTwistError(Exception):
    pass


class InputError(HopfTwistError, ValueError):
    """Malformed input: dimension or field mismatch, bad scalar text, unknown keys."""


class NotInvertible(HopfTwistError, ArithmeticError):
    def __init__(self, msg, rank=None):
        super().__init__(msg)
        self.rank = rank


class Inconsistent(HopfTwistError, ArithmeticError):
    """A linear system has no solution.

    ``certificate`` is a row vector y with y·A = 0 and y·b != 0.
    """

    def __init__(self, msg, certificate=None):
        super().__init__(msg)
        self.certificate = certificate


class NotConvolutionInvertible(HopfTwistError, ArithmeticError):
    pass


class CertificationError(HopfTwistError):
    """Raised when a construction is asked to run on uncertified data."""

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class InternalConsistencyError(HopfTwistError, AssertionError):
    """A conclusion check failed although its hypotheses passed."""

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report
