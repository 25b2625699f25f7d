"""Exception types shared across the package."""


class AnalogonError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(AnalogonError):
    """A data file does not conform to its documented format."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}: "
        if line is not None:
            where += f"line {line}: "
        super().__init__(where + message)


class DuplicateIdError(FormatError):
    """Two records in one corpus file share the same document id."""


class EmptyVectorError(AnalogonError):
    """No token of a document or query resolves to an embedding vector."""


class SelectionError(AnalogonError):
    """A focus selection violates its invariants against a document or KB."""

    def __init__(self, message: str, code: str = "invalid_selection"):
        self.code = code
        super().__init__(message)


class CoverageError(AnalogonError):
    """A purpose/mechanism vector file does not cover every corpus document."""


class RatingsError(AnalogonError):
    """A ratings file is malformed or incomplete for the requested analysis."""
