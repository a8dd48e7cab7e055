"""Exception hierarchy shared by the library and the command line."""


class LinkdetError(Exception):
    """Base class for every error raised by linkdet."""


class DisconnectedGraphError(LinkdetError, ValueError):
    """Raised when a tree-based computation receives a disconnected graph."""


class LimitExceededError(LinkdetError):
    """Raised when an exponential computation exceeds its configured edge limit."""


class MapError(LinkdetError, ValueError):
    """Malformed rotation system or a map that does not live on the sphere."""


class PreconditionError(LinkdetError):
    """An operation was called on an input that violates its precondition."""


class DocumentError(LinkdetError, ValueError):
    """A graph document could not be parsed."""


class MissingBlockError(PreconditionError):
    """A command needs a rotation or involution block the document lacks."""
