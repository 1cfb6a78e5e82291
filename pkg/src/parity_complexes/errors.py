class ComplexError(ValueError):
    """Structurally malformed complex data (duplicate or dangling ids)."""


class CellError(ValueError):
    """A pair (M, P) that is not a cell."""

    def __init__(self, violation):
        super().__init__(violation)
        self.violation = violation


class PreconditionError(ValueError):
    """An operation was called outside its stated hypotheses."""


class SoundnessAlarm(RuntimeError):
    """A construction that should be valid for valid inputs was not.

    Raised instead of returning a possibly wrong answer.
    """


class DocumentError(ValueError):
    """Unreadable document: bad JSON, wrong shape, or dangling ids."""

    def __init__(self, message, line=None, column=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if field is not None:
            where.append(f"field {field}")
        super().__init__(f"{message} ({'; '.join(where)})" if where else message)
        self.line = line
        self.column = column
        self.field = field


class ValidationError(ValueError):
    """A readable complex that fails a required check; carries the report."""

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report
