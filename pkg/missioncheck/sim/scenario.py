"""Simulation scenarios.

A scenario file is a JSON object::

    {
        "grid": 8,
        "cell_size": 100,
        "threats": [[350, 450], [450, 450]],
        "targets": [[750, 750]],
        "uavs": [{"id": 0, "cell": [50, 50], "heading": 90}],
        "duration": 600,
        "speed": 20,
        "turn_radius": 25,
        "seed": 7,
        "random_threats": 4,
        "random_targets": 2
    }

Only ``uavs`` is required; the rest defaults to the mission settings.
"""

import json
import logging
from dataclasses import dataclass
from dataclasses import replace
from pathlib import Path
from typing import Any

import numpy as np
from django.conf import settings

from missioncheck.mission.decision import Heading
from missioncheck.mission.grid import GridConfig

from .exceptions import ScenarioError

logger = logging.getLogger(__name__)

Cell = tuple[float, float]


@dataclass(frozen=True)
class UavStart:
    id: int
    cell: Cell
    heading: Heading = Heading.DEG90

    def to_dict(self) -> dict[str, Any]:
        return {"id": self.id, "cell": list(self.cell), "heading": self.heading.value}


@dataclass(frozen=True)
class Scenario:
    grid: GridConfig
    uavs: tuple[UavStart, ...]
    threats: frozenset[Cell] = frozenset()
    targets: frozenset[Cell] = frozenset()
    duration: float = 600.0
    speed: float = 20.0
    turn_radius: float = 25.0
    seed: int = 0
    random_threats: int = 0
    random_targets: int = 0

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """Raise :class:`ScenarioError` unless the scenario can be simulated."""
        if not self.uavs:
            msg = "A scenario needs at least one UAV"
            raise ScenarioError(msg)
        ids = [uav.id for uav in self.uavs]
        if len(set(ids)) != len(ids):
            msg = f"UAV ids must be unique, got {ids}"
            raise ScenarioError(msg)
        for name, cells in (("threat", self.threats), ("target", self.targets)):
            for cell in sorted(cells):
                self._check_centre(cell, f"{name} cell")
        starts = [uav.cell for uav in self.uavs]
        for uav in self.uavs:
            self._check_centre(uav.cell, f"initial cell of UAV {uav.id}")
            if uav.cell in self.threats:
                msg = f"UAV {uav.id} starts on threat cell {uav.cell}"
                raise ScenarioError(msg)
        if len(set(starts)) != len(starts):
            msg = "UAV initial cells must be distinct"
            raise ScenarioError(msg)
        if not self.duration >= 0 or not self.speed > 0 or not self.turn_radius > 0:
            msg = "duration must be non-negative, speed and turn_radius positive"
            raise ScenarioError(msg)
        free = self.grid.num_cells - len(self.threats | set(starts))
        if self.random_threats < 0 or self.random_targets < 0 or self.random_threats > free:
            msg = f"Cannot draw {self.random_threats} random threats from {free} free cells"
            raise ScenarioError(msg)

    def _check_centre(self, cell: Cell, what: str) -> None:
        try:
            self.grid.index_of(*cell)
        except ValueError as exc:
            msg = f"{what}: {exc}"
            raise ScenarioError(msg) from exc

    @property
    def initial_cells(self) -> frozenset[Cell]:
        return frozenset(uav.cell for uav in self.uavs)

    def resolved(self) -> "Scenario":
        """Copy with the random threats and targets drawn from ``seed`` and added."""
        if not self.random_threats and not self.random_targets:
            return self
        rng = np.random.default_rng(self.seed)
        occupied = self.threats | self.initial_cells
        threats = set(self.threats) | random_cells(rng, self.grid, self.random_threats, occupied)
        targets = set(self.targets) | random_cells(rng, self.grid, self.random_targets, self.initial_cells)
        logger.debug(f"Seed {self.seed}: drew {self.random_threats} threats and {self.random_targets} targets")
        return replace(
            self,
            threats=frozenset(threats),
            targets=frozenset(targets),
            random_threats=0,
            random_targets=0,
        )

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Scenario":
        try:
            grid = GridConfig.from_settings(data.get("grid"), data.get("cell_size"))
            uavs = tuple(
                UavStart(
                    id=int(uav["id"]),
                    cell=_cell(uav["cell"]),
                    heading=Heading.parse(uav.get("heading", 90)),
                )
                for uav in data["uavs"]
            )
            return cls(
                grid=grid,
                uavs=uavs,
                threats=frozenset(_cell(cell) for cell in data.get("threats", [])),
                targets=frozenset(_cell(cell) for cell in data.get("targets", [])),
                duration=float(data.get("duration", 600.0)),
                speed=float(data.get("speed", settings.MISSION_SPEED_MPS)),
                turn_radius=float(data.get("turn_radius", settings.MISSION_TURN_RADIUS_M)),
                seed=int(data.get("seed", 0)),
                random_threats=int(data.get("random_threats", 0)),
                random_targets=int(data.get("random_targets", 0)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            msg = f"Malformed scenario: {exc!r}"
            raise ScenarioError(msg) from exc

    @classmethod
    def from_json(cls, text: str) -> "Scenario":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            msg = f"Scenario is not valid JSON: {exc}"
            raise ScenarioError(msg) from exc
        if not isinstance(data, dict):
            msg = "A scenario must be a JSON object"
            raise ScenarioError(msg)
        return cls.from_dict(data)

    @classmethod
    def read(cls, path: Path) -> "Scenario":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            msg = f"cannot read scenario {path}: {exc.strerror}"
            raise ScenarioError(msg) from exc
        return cls.from_json(text)

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.grid.to_dict(),
            "uavs": [uav.to_dict() for uav in self.uavs],
            "threats": [list(cell) for cell in sorted(self.threats)],
            "targets": [list(cell) for cell in sorted(self.targets)],
            "duration": self.duration,
            "speed": self.speed,
            "turn_radius": self.turn_radius,
            "seed": self.seed,
            "random_threats": self.random_threats,
            "random_targets": self.random_targets,
        }


def _cell(value: Any) -> Cell:
    x, y = value
    return (float(x), float(y))


def random_cells(rng: np.random.Generator, grid: GridConfig, count: int, exclude) -> set[Cell]:
    """``count`` distinct cell centres not in ``exclude``, in a seed-stable order."""
    if count <= 0:
        return set()
    candidates = [
        grid.centre(ix, iy)
        for ix in range(grid.cells)
        for iy in range(grid.cells)
        if grid.centre(ix, iy) not in exclude
    ]
    picks = rng.choice(len(candidates), size=min(count, len(candidates)), replace=False)
    return {candidates[int(k)] for k in picks}
