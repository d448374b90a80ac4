from .decision import DEADLOCK_SINK
from .decision import CellChoice
from .decision import EnvValuation
from .decision import Heading
from .decision import MissionState
from .decision import decide_next_cell
from .decision import destination
from .decision import is_deadlock_state
from .grid import GridConfig
from .model import MissionEncoding
from .model import build_mission_kripke
from .smv import emit_smv
from .specs import builtin_specs
from .specs import extended_specs

__all__ = [
    "DEADLOCK_SINK",
    "CellChoice",
    "EnvValuation",
    "GridConfig",
    "Heading",
    "MissionEncoding",
    "MissionState",
    "build_mission_kripke",
    "builtin_specs",
    "decide_next_cell",
    "destination",
    "emit_smv",
    "extended_specs",
    "is_deadlock_state",
]
