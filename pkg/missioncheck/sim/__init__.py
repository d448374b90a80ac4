from .engine import SimulationResult
from .engine import UavTrack
from .engine import run
from .exceptions import ReplayError
from .exceptions import ScenarioError
from .export import export_csv
from .export import export_json
from .replay import replay
from .scenario import Scenario
from .search_map import SearchMap

__all__ = [
    "ReplayError",
    "Scenario",
    "ScenarioError",
    "SearchMap",
    "SimulationResult",
    "UavTrack",
    "export_csv",
    "export_json",
    "replay",
    "run",
]
