class MissionCheckError(Exception):
    """Base class for every error raised by missioncheck."""
