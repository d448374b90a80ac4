from missioncheck.exceptions import MissionCheckError


class ContractViolationError(MissionCheckError):
    """decide_next_cell and destination disagree, or the sink was asked to move."""


class SmvSyntaxError(MissionCheckError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ConfigFileError(MissionCheckError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
