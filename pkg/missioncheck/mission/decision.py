"""Single-UAV decision layer: which neighbouring cell to fly to next.

Neighbours are laid out in the body frame of the UAV: cell1 ahead, cell2
ahead-left, cell3 ahead-right, cell4 left and cell5 right. The UAV takes the
first free neighbour inside the area in the order cell1, cell3, cell5, cell2,
cell4, except in the south-most row flying south, where cell4 (east) comes
before cell5 (west). cell4 and cell5 reverse its heading.
"""

import enum
import math
from dataclasses import dataclass

from .constants import NUM_ENV_VALUATIONS
from .constants import NUM_NEIGHBOURS
from .constants import THREAT_MASK
from .exceptions import ContractViolationError
from .grid import GridConfig


class Heading(enum.IntEnum):
    DEG90 = 90
    DEG270 = 270

    @property
    def radians(self) -> float:
        return math.pi / 2 if self is Heading.DEG90 else 3 * math.pi / 2

    @property
    def label(self) -> str:
        return f"heading_{self.value}"

    def reversed(self) -> "Heading":
        return Heading.DEG270 if self is Heading.DEG90 else Heading.DEG90

    @classmethod
    def parse(cls, value: str | int) -> "Heading":
        try:
            return cls(int(value))
        except ValueError:
            msg = f"Heading must be 90 or 270, got {value!r}"
            raise ValueError(msg) from None


class CellChoice(enum.IntEnum):
    NO_FREE_CELL = 0
    CELL1 = 1
    CELL2 = 2
    CELL3 = 3
    CELL4 = 4
    CELL5 = 5

    @property
    def label(self) -> str:
        return "choice_no_free_cell" if self is CellChoice.NO_FREE_CELL else f"choice_cell{self.value}"

    @property
    def smv_name(self) -> str:
        return "no_free_cell" if self is CellChoice.NO_FREE_CELL else f"cell{self.value}"

    @property
    def reverses_heading(self) -> bool:
        return self in {CellChoice.CELL4, CellChoice.CELL5}


NEIGHBOURS = (CellChoice.CELL1, CellChoice.CELL2, CellChoice.CELL3, CellChoice.CELL4, CellChoice.CELL5)
PREFERENCE_ORDER = (CellChoice.CELL1, CellChoice.CELL3, CellChoice.CELL5, CellChoice.CELL2, CellChoice.CELL4)
SOUTH_TURN_ORDER = (CellChoice.CELL1, CellChoice.CELL3, CellChoice.CELL4, CellChoice.CELL5, CellChoice.CELL2)

_NORTHBOUND_OFFSETS = {
    CellChoice.CELL1: (0, 1),
    CellChoice.CELL2: (-1, 1),
    CellChoice.CELL3: (1, 1),
    CellChoice.CELL4: (-1, 0),
    CellChoice.CELL5: (1, 0),
}


def neighbour_offsets(heading: Heading) -> dict[CellChoice, tuple[int, int]]:
    """Offsets in cell units of the five neighbours for ``heading``."""
    if heading is Heading.DEG90:
        return dict(_NORTHBOUND_OFFSETS)
    return {choice: (-dx, -dy) for choice, (dx, dy) in _NORTHBOUND_OFFSETS.items()}


@dataclass(frozen=True)
class EnvValuation:
    """What the UAV senses about its five neighbours at one decision."""

    threat: tuple[bool, ...] = (False,) * NUM_NEIGHBOURS
    other_uav: tuple[bool, ...] = (False,) * NUM_NEIGHBOURS

    def __post_init__(self):
        if len(self.threat) != NUM_NEIGHBOURS or len(self.other_uav) != NUM_NEIGHBOURS:
            msg = f"Environment valuation needs {NUM_NEIGHBOURS} threat and {NUM_NEIGHBOURS} other-UAV bits"
            raise ValueError(msg)

    @classmethod
    def from_code(cls, code: int) -> "EnvValuation":
        if not 0 <= code < NUM_ENV_VALUATIONS:
            msg = f"Environment code {code} out of range"
            raise ValueError(msg)
        return cls(
            threat=tuple(bool(code >> k & 1) for k in range(NUM_NEIGHBOURS)),
            other_uav=tuple(bool(code >> (NUM_NEIGHBOURS + k) & 1) for k in range(NUM_NEIGHBOURS)),
        )

    @classmethod
    def from_blocked(cls, threat_cells=(), other_cells=()) -> "EnvValuation":
        """Valuation with the given neighbour numbers (1..5) flagged."""
        return cls(
            threat=tuple(k in set(threat_cells) for k in range(1, NUM_NEIGHBOURS + 1)),
            other_uav=tuple(k in set(other_cells) for k in range(1, NUM_NEIGHBOURS + 1)),
        )

    @property
    def code(self) -> int:
        bits = (*self.threat, *self.other_uav)
        return sum(1 << k for k, bit in enumerate(bits) if bit)

    @property
    def blocked_mask(self) -> int:
        code = self.code
        return (code | code >> NUM_NEIGHBOURS) & THREAT_MASK

    def is_blocked(self, choice: CellChoice) -> bool:
        return self.threat[choice - 1] or self.other_uav[choice - 1]

    def labels(self) -> tuple[str, ...]:
        return (
            *(f"threat_in_cell{k + 1}" for k, bit in enumerate(self.threat) if bit),
            *(f"other_uav_selected_cell{k + 1}" for k, bit in enumerate(self.other_uav) if bit),
        )


@dataclass(frozen=True)
class MissionState:
    cell: tuple[float, float]
    heading: Heading
    env: EnvValuation = EnvValuation()

    def north_cell(self, grid: GridConfig) -> bool:
        return grid.index_of(*self.cell)[1] == grid.cells - 1

    def south_cell(self, grid: GridConfig) -> bool:
        return grid.index_of(*self.cell)[1] == 0


class DeadlockSink:
    """The absorbing state a UAV enters after a ``no_free_cell`` decision."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "DEADLOCK_SINK"


DEADLOCK_SINK = DeadlockSink()


def in_bounds_mask(ix: int, iy: int, heading: Heading, grid: GridConfig) -> int:
    """Bit ``K-1`` is set when neighbour ``cellK`` lies inside the area."""
    mask = 0
    for choice, (dx, dy) in neighbour_offsets(heading).items():
        if grid.in_bounds(ix + dx, iy + dy):
            mask |= 1 << (choice - 1)
    return mask


def is_south_turn(iy: int, heading: Heading) -> bool:
    return heading is Heading.DEG270 and iy == 0


def choose(in_bounds: int, blocked: int, *, south_turn: bool = False) -> CellChoice:
    """Preference rule on five-bit masks; the core of :func:`decide_next_cell`."""
    free = in_bounds & ~blocked
    for choice in SOUTH_TURN_ORDER if south_turn else PREFERENCE_ORDER:
        if free >> (choice - 1) & 1:
            return choice
    return CellChoice.NO_FREE_CELL


def decide_next_cell(state: MissionState, grid: GridConfig) -> CellChoice:
    if isinstance(state, DeadlockSink):
        msg = "The deadlock sink takes no decisions"
        raise ContractViolationError(msg)
    ix, iy = grid.index_of(*state.cell)
    return choose(
        in_bounds_mask(ix, iy, state.heading, grid),
        state.env.blocked_mask,
        south_turn=is_south_turn(iy, state.heading),
    )


def destination(state: MissionState, choice: CellChoice, grid: GridConfig) -> tuple[tuple[float, float], Heading]:
    """Cell centre and heading the UAV flies to after ``choice``."""
    if isinstance(state, DeadlockSink) or choice is CellChoice.NO_FREE_CELL:
        msg = f"No destination for {choice.name} from {state!r}"
        raise ContractViolationError(msg)
    ix, iy = grid.index_of(*state.cell)
    dx, dy = neighbour_offsets(state.heading)[choice]
    if not grid.in_bounds(ix + dx, iy + dy):
        msg = f"{choice.name} from {state.cell} heading {state.heading.value} leaves the search area"
        raise ContractViolationError(msg)
    heading = state.heading.reversed() if choice.reverses_heading else state.heading
    return grid.centre(ix + dx, iy + dy), heading


def is_deadlock_state(state: MissionState, grid: GridConfig) -> bool:
    """True when every neighbour is blocked or outside the area."""
    if isinstance(state, DeadlockSink):
        return False
    ix, iy = grid.index_of(*state.cell)
    in_bounds = in_bounds_mask(ix, iy, state.heading, grid)
    return all(
        not in_bounds >> (choice - 1) & 1 or state.env.is_blocked(choice) for choice in NEIGHBOURS
    )
