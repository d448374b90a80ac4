from missioncheck.exceptions import MissionCheckError


class ScenarioError(MissionCheckError):
    """The scenario file or object is inconsistent."""


class ReplayError(MissionCheckError):
    """A trace cannot be decoded or flown in the mission model."""
