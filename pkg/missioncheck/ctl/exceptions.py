from dataclasses import dataclass

from missioncheck.exceptions import MissionCheckError


@dataclass(frozen=True, slots=True)
class SourceSpan:
    """Half-open character range ``[start, end)`` inside the parsed text."""

    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            msg = f"Invalid span [{self.start}, {self.end})"
            raise ValueError(msg)


class FormulaSyntaxError(MissionCheckError):
    """Raised by the parser; always carries the offending span."""

    def __init__(self, message: str, span: SourceSpan, expected: frozenset[str] = frozenset()):
        self.message = message
        self.span = span
        self.expected = expected
        detail = f"{message} at {span.start}"
        if expected:
            detail += f" (expected one of: {', '.join(sorted(expected))})"
        super().__init__(detail)
