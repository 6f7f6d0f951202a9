"""Exception types raised across the package."""


class SturmError(Exception):
    """Base class for every error raised by sturmocc."""


class InvalidSlope(SturmError, ValueError):
    pass


class IndexOutOfRange(SturmError, IndexError):
    pass


class KOutOfRange(SturmError, ValueError):
    pass


class NotAPrefix(SturmError, ValueError):
    pass


class NotASuffix(SturmError, ValueError):
    pass


class InvalidWord(SturmError, ValueError):
    pass


class NotAPalindrome(SturmError, ValueError):
    pass


class NotAFactor(SturmError, ValueError):
    pass


class InsufficientPrefix(SturmError, ValueError):
    pass


class UnsupportedSlope(SturmError, ValueError):
    """Raised by the singular-word machinery for slopes with a_1 = 1.

    Those slopes are served by exchanging letters and working with the
    complementary slope instead.
    """
