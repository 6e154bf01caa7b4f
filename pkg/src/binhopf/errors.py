"""Exception hierarchy for binhopf."""


class BinHopfError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTree(BinHopfError, ValueError):
    """A tree description is not a full binary tree."""


class BadLabel(BinHopfError, ValueError):
    """A leaf label is not a valid identifier."""


class NonBinaryInput(BinHopfError, ValueError):
    """A vertex has more than two children."""


class BadIndex(BinHopfError, IndexError):
    """An edge or leaf position is out of range."""


class ResourceLimit(BinHopfError, RuntimeError):
    """A request exceeds one of the configured size bounds in :data:`binhopf.config.LIMITS`."""


class ParseError(BinHopfError, ValueError):
    """Text input does not match the grammar.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")
