"""Exception hierarchy shared by every module of the package."""


class PregroupError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(PregroupError, ValueError):
    """Unknown generator, bad term syntax, invalid poset or grammar file."""


class UnknownNameError(PregroupError, LookupError):
    """A type name or surface word is missing from a model."""


class PreconditionError(PregroupError):
    """An operation was called on input outside its domain (e.g. a non-sentence)."""


class ConsistencyError(PregroupError):
    """Two objects that must describe the same word do not."""


class ModelError(PregroupError):
    """A grammar model is valid but unsuitable for the requested analysis."""
