"""Exception hierarchy for streamaudit.

All library errors derive from StreamAuditError so callers can catch one
base class. Parsing errors carry the 1-based line number of the offending
input line when known.
"""


class StreamAuditError(Exception):
    """Base class for all streamaudit errors."""


class ParseError(StreamAuditError):
    """Malformed input file (bad header, bad row, ragged CSV, ...)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedFeature(StreamAuditError):
    """Input uses a format feature the parser deliberately rejects
    (sparse ARFF rows, string/date attributes, missing values)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyStream(StreamAuditError):
    """An operation that needs at least one instance got zero."""


class ZeroVariance(StreamAuditError):
    """Autocorrelation is undefined: only one class occurs."""


class NotBinary(StreamAuditError):
    """Autocorrelation requires exactly two distinct classes."""


class LagTooLarge(StreamAuditError):
    """Requested max_lag is not smaller than the stream length."""


class InvalidModel(StreamAuditError):
    """Synthetic label model parameters are out of range or infeasible."""


class InvalidRho(StreamAuditError):
    """Restart probability outside [0, 1]."""


class SchemaMismatch(StreamAuditError):
    """A classifier bound to one schema was evaluated on another."""


class LabelMismatch(StreamAuditError):
    """A prediction log's true-label column disagrees with the dataset."""

    def __init__(self, index, expected, got):
        self.index = index
        super().__init__(
            f"true label at index {index} is {got!r}, dataset has {expected!r}"
        )


class EmptyLog(StreamAuditError):
    """A prediction log contained no rows."""
