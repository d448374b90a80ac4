from missioncheck.exceptions import MissionCheckError


class TraceValidationError(MissionCheckError):
    """A trace is not a path of the model or does not show what it claims to."""


class TraceFormatError(MissionCheckError):
    """A serialized trace cannot be read."""
