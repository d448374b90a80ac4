"""Compile the decision layer into an implicit Kripke model.

A core is a (cell, heading) pair or the deadlock sink; the input is the
10-bit environment valuation, drawn afresh at every step. State numbering is
``core * 1024 + env_code`` with ``core = (ix * N + iy) * 2 + h`` (``h = 0`` for
90 degrees, ``1`` for 270) and the sink core ``2 * N * N``.
"""

import logging

import numpy as np

from missioncheck.kripke.implicit import ImplicitKripke

from .constants import NUM_ENV_VALUATIONS
from .constants import NUM_NEIGHBOURS
from .constants import OTHER_UAV_PROPS
from .constants import THREAT_MASK
from .constants import THREAT_PROPS
from .decision import DEADLOCK_SINK
from .decision import NEIGHBOURS
from .decision import CellChoice
from .decision import DeadlockSink
from .decision import EnvValuation
from .decision import Heading
from .decision import MissionState
from .decision import choose
from .decision import neighbour_offsets
from .grid import GridConfig

logger = logging.getLogger(__name__)

HEADINGS = (Heading.DEG90, Heading.DEG270)


class MissionEncoding:
    """Bijection between mission states and the integer states of the model."""

    def __init__(self, grid: GridConfig):
        self.grid = grid
        self.num_cores = 2 * grid.num_cells + 1
        self.sink_core = 2 * grid.num_cells

    def core_of(self, ix: int, iy: int, heading: Heading) -> int:
        return (ix * self.grid.cells + iy) * 2 + HEADINGS.index(heading)

    def core_parts(self, core: int) -> tuple[int, int, Heading]:
        if not 0 <= core < self.sink_core:
            msg = f"Core {core} is not a (cell, heading) core"
            raise ValueError(msg)
        cell, h = divmod(core, 2)
        ix, iy = divmod(cell, self.grid.cells)
        return ix, iy, HEADINGS[h]

    def core_name(self, core: int) -> str:
        if core == self.sink_core:
            return "sink"
        ix, iy, heading = self.core_parts(core)
        x, y = self.grid.centre(ix, iy)
        return f"x{x:g}_y{y:g}_h{heading.value}"

    def encode(self, state: MissionState | DeadlockSink, env: EnvValuation | None = None) -> int:
        if isinstance(state, DeadlockSink):
            return self.sink_core * NUM_ENV_VALUATIONS + (env.code if env is not None else 0)
        ix, iy = self.grid.index_of(*state.cell)
        return self.core_of(ix, iy, state.heading) * NUM_ENV_VALUATIONS + state.env.code

    def decode(self, state: int) -> MissionState | DeadlockSink:
        core, code = divmod(state, NUM_ENV_VALUATIONS)
        if core == self.sink_core:
            return DEADLOCK_SINK
        if not 0 <= state < self.num_cores * NUM_ENV_VALUATIONS:
            msg = f"State code {state} does not belong to a {self.grid.cells}x{self.grid.cells} mission model"
            raise ValueError(msg)
        ix, iy, heading = self.core_parts(core)
        return MissionState(self.grid.centre(ix, iy), heading, EnvValuation.from_code(code))

    def env_of(self, state: int) -> EnvValuation:
        return EnvValuation.from_code(state % NUM_ENV_VALUATIONS)


class MissionKripke(ImplicitKripke):
    """Implicit mission model that can decode its own state codes."""

    def __init__(self, encoding: MissionEncoding, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.encoding = encoding

    @property
    def grid(self) -> GridConfig:
        return self.encoding.grid


def _choice_table() -> np.ndarray:
    """``table[south_turn, in_bounds_mask, blocked_mask]`` over all five-bit masks."""
    size = 1 << NUM_NEIGHBOURS
    table = np.zeros((2, size, size), dtype=np.int8)
    for south_turn in (0, 1):
        for in_bounds in range(size):
            for blocked in range(size):
                table[south_turn, in_bounds, blocked] = choose(in_bounds, blocked, south_turn=bool(south_turn))
    return table


def mission_metadata(grid: GridConfig, initial_cell: tuple[float, float], initial_heading: Heading) -> dict:
    return {
        "kind": "mission",
        "grid": grid.cells,
        "cell_size": grid.cell_size,
        "initial_cell": list(initial_cell),
        "initial_heading": initial_heading.value,
    }


def build_mission_kripke(
    grid: GridConfig,
    initial_cell: tuple[float, float] | None = None,
    initial_heading: Heading = Heading.DEG90,
) -> MissionKripke:
    """Kripke model of one UAV against a nondeterministic environment.

    Starts at ``initial_cell`` (the south-west cell centre by default) with
    ``initial_heading`` under every environment valuation.
    """
    encoding = MissionEncoding(grid)
    n = grid.cells
    initial_cell = initial_cell if initial_cell is not None else grid.origin
    init_ix, init_iy = grid.index_of(*initial_cell)

    cores = np.arange(encoding.sink_core)
    cells, h = np.divmod(cores, 2)
    ix, iy = np.divmod(cells, n)

    # per core: offsets of every neighbour and whether it is inside the area
    offsets = np.array(
        [[neighbour_offsets(heading)[choice] for choice in NEIGHBOURS] for heading in HEADINGS],
        dtype=np.int64,
    )
    target_x = ix[:, None] + offsets[h, :, 0]
    target_y = iy[:, None] + offsets[h, :, 1]
    inside = (target_x >= 0) & (target_x < n) & (target_y >= 0) & (target_y < n)
    in_bounds = (inside * (1 << np.arange(NUM_NEIGHBOURS))).sum(axis=1)

    env = np.arange(NUM_ENV_VALUATIONS)
    blocked = (env | env >> NUM_NEIGHBOURS) & THREAT_MASK
    south_turn = ((h == 1) & (iy == 0)).astype(np.int64)
    choice = _choice_table()[south_turn[:, None], in_bounds[:, None], blocked[None, :]].astype(np.int64)

    moving = choice > 0
    slot = np.clip(choice - 1, 0, NUM_NEIGHBOURS - 1)
    rows = cores[:, None]
    next_x = target_x[rows, slot]
    next_y = target_y[rows, slot]
    next_h = np.where(choice >= CellChoice.CELL4, 1 - h[:, None], h[:, None])
    step = np.full((encoding.num_cores, NUM_ENV_VALUATIONS), encoding.sink_core, dtype=np.int64)
    step[:-1] = np.where(moving, (next_x * n + next_y) * 2 + next_h, encoding.sink_core)

    shape = step.shape
    at_sink = np.zeros(shape, dtype=bool)
    at_sink[-1] = True

    def per_core(flags: np.ndarray) -> np.ndarray:
        table = np.broadcast_to(np.append(flags, True)[:, None], shape)
        return np.ascontiguousarray(table)

    labels = {
        "heading_90": per_core(h == 0),
        "heading_270": per_core(h == 1),
        "north_cell": per_core(iy == n - 1),
        "south_cell": per_core(iy == 0),
    }
    for bit, name in enumerate((*THREAT_PROPS, *OTHER_UAV_PROPS)):
        labels[name] = np.ascontiguousarray(np.broadcast_to((env >> bit & 1).astype(bool), shape))
    full_choice = np.full(shape, -1, dtype=np.int64)
    full_choice[:-1] = choice
    for value in (*NEIGHBOURS, CellChoice.NO_FREE_CELL):
        labels[value.label] = full_choice == value
    labels["at_sink"] = at_sink

    initial = np.zeros(shape, dtype=bool)
    initial[encoding.core_of(init_ix, init_iy, initial_heading)] = True

    model = MissionKripke(
        encoding,
        step,
        labels,
        initial,
        core_names=[encoding.core_name(core) for core in range(encoding.num_cores)],
        input_namer=lambda code: f"env{code}",
        metadata=mission_metadata(grid, grid.centre(init_ix, init_iy), initial_heading),
    )
    logger.info(f"Built mission model for a {n}x{n} grid: {model.describe()}")
    return model
