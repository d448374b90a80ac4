"""Trajectory files.

Numbers are written with fixed precision so that a given scenario and seed
always produce the same bytes.
"""

import json
import logging
from pathlib import Path
from typing import Any

from missioncheck.utils import fixed

from .engine import SimulationResult
from .engine import UavTrack
from .search_map import SearchMap

logger = logging.getLogger(__name__)

CSV_HEADER = "t,uav,x,y,theta"


def export_csv(tracks: list[UavTrack]) -> str:
    lines = [CSV_HEADER]
    for track in sorted(tracks, key=lambda track: track.uav_id):
        lines.extend(
            f"{fixed(sample.t, 3)},{track.uav_id},{fixed(sample.x)},{fixed(sample.y)},{fixed(sample.theta)}"
            for sample in track.samples
        )
    return "\n".join(lines) + "\n"


def _rounded(value: Any) -> Any:
    if isinstance(value, float):
        return round(value, 6) + 0.0
    if isinstance(value, dict):
        return {key: _rounded(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_rounded(item) for item in value]
    return value


def export_json(tracks: list[UavTrack], search_map: SearchMap | None = None, **extra: Any) -> str:
    document = {
        "tracks": [track.to_dict() for track in sorted(tracks, key=lambda track: track.uav_id)],
        "map": search_map.to_dict() if search_map is not None else None,
        **extra,
    }
    return json.dumps(_rounded(document), indent=2, sort_keys=True) + "\n"


def write_result(result: SimulationResult, out: Path) -> tuple[Path, Path]:
    """Write ``<out>.csv`` and ``<out>.json``."""
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    csv_path = out.with_suffix(".csv")
    json_path = out.with_suffix(".json")
    csv_path.write_text(export_csv(result.tracks), encoding="utf-8")
    json_path.write_text(
        export_json(result.tracks, result.search_map, scenario=result.scenario.to_dict(), summary=result.summary()),
        encoding="utf-8",
    )
    logger.info(f"Wrote trajectories to {csv_path} and {json_path}")
    return csv_path, json_path
