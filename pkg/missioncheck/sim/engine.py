"""Event-driven multi-UAV search.

Each UAV flies cell to cell along Dubins paths at constant speed. On reaching a
cell centre it senses its five neighbours, takes the mission decision and
claims the destination in the shared search map before anyone else decides.
Arrivals at the same instant are handled in ascending UAV id order. Poses are
sampled on the global time grid ``k * MISSION_SAMPLE_PERIOD_S``.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from dataclasses import field
from typing import Any

from django.conf import settings

from missioncheck.dubins.planner import WORD_SETS
from missioncheck.dubins.planner import DubinsPath
from missioncheck.dubins.planner import Pose
from missioncheck.dubins.planner import plan
from missioncheck.dubins.planner import pose_at
from missioncheck.mission.decision import NEIGHBOURS
from missioncheck.mission.decision import CellChoice
from missioncheck.mission.decision import EnvValuation
from missioncheck.mission.decision import Heading
from missioncheck.mission.decision import MissionState
from missioncheck.mission.decision import decide_next_cell
from missioncheck.mission.decision import destination
from missioncheck.mission.decision import neighbour_offsets
from missioncheck.mission.grid import GridConfig

from .scenario import Scenario
from .search_map import SearchMap

logger = logging.getLogger(__name__)

# samples closer than this to a cell border are not counted as inside the cell
BORDER_TOLERANCE = 1e-6


@dataclass(frozen=True)
class PoseSample:
    t: float
    x: float
    y: float
    theta: float

    def to_dict(self) -> dict[str, float]:
        return {"t": self.t, "x": self.x, "y": self.y, "theta": self.theta}


@dataclass(frozen=True)
class DecisionRecord:
    t: float
    state: MissionState
    choice: CellChoice

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "cell": list(self.state.cell),
            "heading": self.state.heading.value,
            "env": self.state.env.code,
            "choice": self.choice.label,
        }


@dataclass(frozen=True)
class Marker:
    """Something a UAV sensed in a neighbour cell."""

    step: int
    cell: tuple[float, float]
    kind: str

    def to_dict(self) -> dict[str, Any]:
        return {"step": self.step, "cell": list(self.cell), "kind": self.kind}


@dataclass
class UavTrack:
    uav_id: int
    samples: list[PoseSample] = field(default_factory=list)
    decisions: list[DecisionRecord] = field(default_factory=list)
    cells: list[tuple[float, float]] = field(default_factory=list)
    markers: list[Marker] = field(default_factory=list)
    deadlocked: bool = False

    @property
    def deadlock_cell(self) -> tuple[float, float] | None:
        return self.decisions[-1].state.cell if self.deadlocked else None

    def to_dict(self) -> dict[str, Any]:
        return {
            "uav": self.uav_id,
            "samples": [sample.to_dict() for sample in self.samples],
            "decisions": [decision.to_dict() for decision in self.decisions],
            "cells": [list(cell) for cell in self.cells],
            "markers": [marker.to_dict() for marker in self.markers],
            "deadlocked": self.deadlocked,
        }


@dataclass
class SimulationResult:
    scenario: Scenario
    tracks: list[UavTrack]
    search_map: SearchMap

    @property
    def deadlocks(self) -> int:
        return sum(track.deadlocked for track in self.tracks)

    @property
    def threat_entries(self) -> int:
        return sum(count_threat_entries(track, self.scenario.grid, self.scenario.threats) for track in self.tracks)

    def summary(self) -> dict[str, Any]:
        return {
            "uavs": len(self.tracks),
            "decisions": sum(len(track.decisions) for track in self.tracks),
            "samples": sum(len(track.samples) for track in self.tracks),
            "coverage": self.search_map.coverage,
            "targets_found": int(self.search_map.target_found.sum()),
            "threat_entries": self.threat_entries,
            "duplicate_claims": self.search_map.duplicate_claims,
            "deadlocks": self.deadlocks,
        }


def count_threat_entries(track: UavTrack, grid: GridConfig, threats) -> int:
    """Samples of ``track`` lying strictly inside a threat cell."""
    entries = 0
    for sample in track.samples:
        cell = grid.cell_containing(sample.x, sample.y)
        if cell is None or grid.centre(*cell) not in threats:
            continue
        cx, cy = grid.centre(*cell)
        half = grid.cell_size / 2 - BORDER_TOLERANCE
        if abs(sample.x - cx) < half and abs(sample.y - cy) < half:
            entries += 1
    return entries


def dubins_words() -> tuple[str, ...]:
    return WORD_SETS[settings.DUBINS_WORDS]


def fly(track: UavTrack, path: DubinsPath, depart: float, speed: float, until: float) -> float:
    """Append the grid-time samples of ``path`` flown from ``depart``; return the arrival time."""
    period = settings.MISSION_SAMPLE_PERIOD_S
    arrival = depart + path.length / speed
    end = min(arrival, until)
    k = math.floor(depart / period + 1e-9) + 1
    while k * period <= end + 1e-9:
        t = k * period
        pose = pose_at(path, (t - depart) * speed)
        track.samples.append(PoseSample(t, pose.x, pose.y, pose.theta))
        k += 1
    return arrival


def plan_move(
    grid: GridConfig,
    state: MissionState,
    choice: CellChoice,
    radius: float,
) -> tuple[DubinsPath, tuple[float, float], Heading]:
    cell, heading = destination(state, choice, grid)
    start = Pose(*state.cell, state.heading.radians)
    goal = Pose(*cell, heading.radians)
    return plan(start, goal, radius, dubins_words()), cell, heading


@dataclass
class _Uav:
    track: UavTrack
    cell: tuple[float, float]
    heading: Heading
    target: tuple[tuple[float, float], Heading] | None = None


class Simulation:
    def __init__(self, scenario: Scenario):
        self.scenario = scenario.resolved()
        self.grid = self.scenario.grid
        self.search_map = SearchMap(self.grid)
        self.uavs = {
            start.id: _Uav(UavTrack(start.id), start.cell, start.heading)
            for start in sorted(self.scenario.uavs, key=lambda uav: uav.id)
        }

    def sense(self, uav_id: int, cell: tuple[float, float], heading: Heading) -> EnvValuation:
        """Neighbour bits from the threat field and the other UAVs' cells and claims."""
        ix, iy = self.grid.index_of(*cell)
        others = {other.cell for other_id, other in self.uavs.items() if other_id != uav_id}
        threat, other_uav = [], []
        for choice in NEIGHBOURS:
            dx, dy = neighbour_offsets(heading)[choice]
            nx, ny = ix + dx, iy + dy
            if not self.grid.in_bounds(nx, ny):
                threat.append(False)
                other_uav.append(False)
                continue
            centre = self.grid.centre(nx, ny)
            has_threat = centre in self.scenario.threats
            if has_threat:
                self.search_map.threat_known[nx, ny] = True
            claimant = self.search_map.claimant((nx, ny))
            threat.append(has_threat)
            other_uav.append(centre in others or (claimant is not None and claimant != uav_id))
        return EnvValuation(tuple(threat), tuple(other_uav))

    def arrive(self, uav: _Uav) -> None:
        index = self.grid.index_of(*uav.cell)
        self.search_map.visit(index)
        if uav.cell in self.scenario.targets and not self.search_map.target_found[index]:
            self.search_map.target_found[index] = True
            logger.info(f"UAV {uav.track.uav_id} found a target at {uav.cell}")
        uav.track.cells.append(uav.cell)

    def step(self, uav_id: int, now: float) -> float | None:
        """Handle one arrival of ``uav_id``; the time of its next arrival, if any."""
        uav = self.uavs[uav_id]
        if uav.target is not None:
            self.search_map.release(self.grid.index_of(*uav.target[0]), uav_id)
            uav.cell, uav.heading = uav.target
            uav.target = None
            self.arrive(uav)

        state = MissionState(uav.cell, uav.heading, self.sense(uav_id, uav.cell, uav.heading))
        choice = decide_next_cell(state, self.grid)
        uav.track.decisions.append(DecisionRecord(now, state, choice))
        if choice is CellChoice.NO_FREE_CELL:
            uav.track.deadlocked = True
            logger.info(f"UAV {uav_id} deadlocked at {uav.cell} at t={now:.2f} s")
            return None

        path, cell, heading = plan_move(self.grid, state, choice, self.scenario.turn_radius)
        self.search_map.claim(self.grid.index_of(*cell), uav_id)
        uav.target = (cell, heading)
        return fly(uav.track, path, now, self.scenario.speed, self.scenario.duration)

    def run(self) -> SimulationResult:
        events: list[tuple[float, int]] = []
        for uav_id, uav in self.uavs.items():
            uav.track.samples.append(PoseSample(0.0, *uav.cell, uav.heading.radians))
            self.arrive(uav)
            heapq.heappush(events, (0.0, uav_id))

        while events:
            now, uav_id = heapq.heappop(events)
            if now > self.scenario.duration:
                break
            arrival = self.step(uav_id, now)
            if arrival is not None:
                heapq.heappush(events, (arrival, uav_id))

        result = SimulationResult(self.scenario, [uav.track for uav in self.uavs.values()], self.search_map)
        logger.debug(f"Simulated {self.scenario.duration:g} s with seed {self.scenario.seed}: {result.summary()}")
        return result


def run(scenario: Scenario) -> SimulationResult:
    return Simulation(scenario).run()
