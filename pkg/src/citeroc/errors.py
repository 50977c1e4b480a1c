"""Exception hierarchy shared by every citeroc module."""


class CiterocError(Exception):
    """Base class for all citeroc errors."""


class DataError(CiterocError):
    """Problem with the corpus data or with an entity lookup against it."""


class UsageError(CiterocError):
    """An operation was asked for something it does not support."""


class RecordError(DataError, ValueError):
    """A publication record violates a structural rule."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class ParseError(RecordError):
    """A corpus line could not be turned into a record."""

    def __init__(self, field: str, message: str, lineno: int | None = None):
        where = f"line {lineno}: " if lineno is not None else ""
        CiterocError.__init__(self, f"{where}{field}: {message}")
        self.field = field
        self.lineno = lineno


class IngestError(DataError):
    pass


class EntityLookupError(DataError, LookupError):
    pass


class OptionsError(UsageError, ValueError):
    pass


class UndefinedMetricError(DataError):
    """The metric has no defined value for the requested entity (e.g. a zero denominator)."""


class EmptyPortfolioError(DataError):
    pass


class GenerationError(UsageError, ValueError):
    pass
