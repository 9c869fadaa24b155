"""Exception hierarchy shared by every module of the package."""


class CauchonError(Exception):
    """Base class for all errors raised by ``cauchon``."""


class RankError(CauchonError, ValueError):
    """Rank outside the admitted range for a Lie type family."""


class DomainError(CauchonError, ValueError):
    """Argument outside the domain of an operation."""


class NumberingError(CauchonError, ValueError):
    """A numbering of the simple roots is not a good numbering."""


class WordError(CauchonError, ValueError):
    """A word is not a reduced decomposition of the longest element."""


class OrderError(CauchonError, ValueError):
    """A total order on the positive roots is not of the required kind."""


class SizeError(CauchonError):
    """A column is too large for exhaustive enumeration."""
