"""Exception hierarchy shared by every eqlog module."""


class EqlogError(Exception):
    """Base class for all eqlog errors."""


class ParseError(EqlogError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class VocabularyError(EqlogError):
    """An atom is used outside the vocabulary it is evaluated over."""


class VocabularyTooLarge(VocabularyError):
    pass


class PreconditionError(EqlogError):
    """An operation was called on inputs that violate its precondition."""


class IncoherentError(PreconditionError):
    """The theory or program has no equilibrium model where one is required."""


class ClosureError(PreconditionError):
    """A model set is not closed under total expansion."""


class InternalError(EqlogError):
    """A constructed result failed post-verification or two routes disagree."""
