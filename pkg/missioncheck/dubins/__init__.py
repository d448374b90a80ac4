from .exceptions import PlanningError
from .planner import ALL_WORDS
from .planner import FOUR_WORDS
from .planner import DubinsPath
from .planner import Pose
from .planner import plan
from .planner import sample

__all__ = ["ALL_WORDS", "FOUR_WORDS", "DubinsPath", "PlanningError", "Pose", "plan", "sample"]
