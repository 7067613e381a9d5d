"""Exception hierarchy shared by every module of the package."""


class PiecewiseError(Exception):
    """Base class for all errors raised by :mod:`piecewise`."""


class AlphabetError(PiecewiseError, ValueError):
    """A symbol is outside the declared alphabet, or the alphabet is unsuitable."""


class ParseError(PiecewiseError, ValueError):
    """Malformed word or run-length text."""


class CapExceeded(PiecewiseError):
    """A brute-force computation would exceed its configured work budget."""


class NoDistinguisher(PiecewiseError, ValueError):
    """Two equal words have no distinguisher."""


class ReductionRequired(PiecewiseError, ValueError):
    """The closed formula for binary words was applied to a word with interior unit blocks."""


class PatternNotFound(PiecewiseError, ValueError):
    """No isolated letter flanked by longer blocks exists in the word."""
