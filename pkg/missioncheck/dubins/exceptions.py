from missioncheck.exceptions import MissionCheckError


class PlanningError(MissionCheckError):
    """No candidate word connects the two poses."""
