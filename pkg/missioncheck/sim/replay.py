"""Fly a checker trace of the mission model as a single-UAV trajectory."""

import logging

from django.conf import settings

from missioncheck.checker.traces import Trace
from missioncheck.mission.decision import NEIGHBOURS
from missioncheck.mission.decision import CellChoice
from missioncheck.mission.decision import DeadlockSink
from missioncheck.mission.decision import MissionState
from missioncheck.mission.decision import decide_next_cell
from missioncheck.mission.decision import destination
from missioncheck.mission.decision import neighbour_offsets
from missioncheck.mission.grid import GridConfig
from missioncheck.mission.model import MissionEncoding

from .engine import DecisionRecord
from .engine import Marker
from .engine import PoseSample
from .engine import UavTrack
from .engine import fly
from .engine import plan_move
from .exceptions import ReplayError
from .scenario import Scenario

logger = logging.getLogger(__name__)


def trace_grid(trace: Trace, scenario: Scenario | None = None) -> GridConfig:
    """Grid of the mission model a trace was produced on."""
    if trace.model.get("kind") == "mission":
        try:
            return GridConfig(int(trace.model["grid"]), float(trace.model["cell_size"]))
        except (KeyError, TypeError, ValueError) as exc:
            msg = f"Trace model description is incomplete: {trace.model}"
            raise ReplayError(msg) from exc
    if scenario is not None:
        return scenario.grid
    msg = f"Trace was not produced on a mission model (model kind {trace.model.get('kind')!r})"
    raise ReplayError(msg)


def decode_trace(trace: Trace, grid: GridConfig) -> list[MissionState | DeadlockSink]:
    encoding = MissionEncoding(grid)
    states = []
    for step in trace.steps:
        try:
            states.append(encoding.decode(step.state_code))
        except ValueError as exc:
            msg = f"Step {step.index}: {exc}"
            raise ReplayError(msg) from exc
    if not states:
        msg = "Cannot replay an empty trace"
        raise ReplayError(msg)
    if isinstance(states[0], DeadlockSink):
        msg = "Trace starts in the deadlock sink"
        raise ReplayError(msg)
    return states


def _markers(index: int, state: MissionState, grid: GridConfig) -> list[Marker]:
    ix, iy = grid.index_of(*state.cell)
    markers = []
    for choice in NEIGHBOURS:
        dx, dy = neighbour_offsets(state.heading)[choice]
        if not grid.in_bounds(ix + dx, iy + dy):
            continue
        cell = grid.centre(ix + dx, iy + dy)
        if state.env.threat[choice - 1]:
            markers.append(Marker(index, cell, "threat"))
        if state.env.other_uav[choice - 1]:
            markers.append(Marker(index, cell, "other_uav"))
    return markers


def replay(trace: Trace, scenario: Scenario | None = None) -> UavTrack:
    """Trajectory realising the cell and heading sequence of ``trace``.

    The lasso back-edge, if any, is not flown again. Speed and turning radius
    come from ``scenario`` when given, otherwise from the mission settings.
    """
    grid = trace_grid(trace, scenario)
    speed = scenario.speed if scenario is not None else settings.MISSION_SPEED_MPS
    radius = scenario.turn_radius if scenario is not None else settings.MISSION_TURN_RADIUS_M
    states = decode_trace(trace, grid)

    first = states[0]
    track = UavTrack(0)
    track.samples.append(PoseSample(0.0, *first.cell, first.heading.radians))
    now = 0.0
    for index, state in enumerate(states):
        following = states[index + 1] if index + 1 < len(states) else None
        if isinstance(state, DeadlockSink):
            if following is not None and not isinstance(following, DeadlockSink):
                msg = f"Step {index + 1}: the deadlock sink has no way out"
                raise ReplayError(msg)
            continue
        track.cells.append(state.cell)
        track.markers.extend(_markers(index, state, grid))
        choice = decide_next_cell(state, grid)
        track.decisions.append(DecisionRecord(now, state, choice))
        if choice is CellChoice.NO_FREE_CELL:
            track.deadlocked = True
            if following is not None and not isinstance(following, DeadlockSink):
                msg = f"Step {index}: a no_free_cell decision must lead to the deadlock sink"
                raise ReplayError(msg)
            logger.info(f"Replayed deadlock at {state.cell} heading {state.heading.value}")
            continue
        if following is None:
            break
        cell, heading = destination(state, choice, grid)
        if isinstance(following, DeadlockSink) or (following.cell, following.heading) != (cell, heading):
            msg = f"Step {index} -> {index + 1} is not a transition of the mission model"
            raise ReplayError(msg)
        path, _, _ = plan_move(grid, state, choice, radius)
        arrival = fly(track, path, now, speed, until=float("inf"))
        if track.samples[-1].t < arrival - 1e-9:
            end = path.end
            track.samples.append(PoseSample(arrival, end.x, end.y, end.theta))
        now = arrival

    logger.info(f"Replayed {len(trace)} trace steps as {len(track.samples)} pose samples")
    return track
