"""Exception classes shared across the package."""


class DomainError(ValueError):
    """A precondition of an algebraic operation was violated."""


class ValidationError(DomainError):
    """A raw windowed table does not describe an element.

    ``kind`` is one of ``"coordinate-mixing"``, ``"injectivity"``,
    ``"monotonicity"``, ``"tail-inconsistency"`` or ``"malformed"``.
    """

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


class ParseError(ValueError):
    """Malformed textual input. Carries a position when one is known."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None, token: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if token is not None:
            where.append(f"token {token}")
        text = message if not where else f"{message} ({', '.join(where)})"
        super().__init__(text)
        self.line = line
        self.column = column
        self.token = token
