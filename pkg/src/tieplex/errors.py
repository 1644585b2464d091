"""Exception types shared across the library.

All errors raised for bad user input derive from :class:`TieplexError`,
so callers (and the CLI) can distinguish input problems from bugs.
"""


class TieplexError(Exception):
    """Base class for all input and validation errors."""


class UnknownNode(TieplexError):
    pass


class UnknownLayer(TieplexError):
    pass


class SelfTie(TieplexError):
    pass


class DuplicateLayerName(TieplexError):
    pass


class DuplicateNodeLabel(TieplexError):
    pass


class NotStronglyConnected(TieplexError):
    pass


class InvalidParameter(TieplexError):
    pass


class MissingAttributes(TieplexError):
    pass


class ParseError(TieplexError):
    """File-format error; carries the 1-based line number when known."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class MissingHeader(ParseError):
    pass


class MalformedLine(ParseError):
    pass


class EmptyField(ParseError):
    pass


class UnknownBucketKey(ParseError):
    pass
