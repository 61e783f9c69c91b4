"""Exception hierarchy.

Every error raised on bad input derives from :class:`FlagMotiveError`; the CLI
prints ``<ClassName>: <message>`` and exits 1.  :class:`VerificationMismatch`
is the one exception that maps to exit code 2.
"""


class FlagMotiveError(Exception):
    pass


class SpecSyntaxError(FlagMotiveError):
    """Malformed group spec, element expression or filtration file."""


class InvalidMatrix(FlagMotiveError):
    pass


class NotFiniteType(FlagMotiveError):
    pass


class BudgetExceeded(FlagMotiveError):
    pass


class BaseMismatch(FlagMotiveError):
    pass


class RankMismatch(FlagMotiveError):
    pass


class NotProper(FlagMotiveError):
    pass


class SplittingNotCertified(FlagMotiveError):
    """Strictness fails and no vanishing waiver was given.

    This says the splitting argument does not apply, not that the motive
    fails to split.
    """


class ShiftPresent(FlagMotiveError):
    pass


class NegativeDegree(FlagMotiveError):
    pass


class VerificationMismatch(FlagMotiveError):
    pass
