from collections.abc import Iterable

from missioncheck.exceptions import MissionCheckError


class InvalidModelError(MissionCheckError):
    """The structure breaks a Kripke invariant (empty initial set, dead end, bad index)."""


class ModelFormatError(InvalidModelError):
    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class UnknownPropositionError(MissionCheckError):
    def __init__(self, names: Iterable[str]):
        self.names = tuple(sorted(names))
        super().__init__(f"Unknown proposition(s): {', '.join(self.names)}")
