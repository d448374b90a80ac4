import logging
from typing import Any

import numpy as np

from missioncheck.mission.grid import GridConfig

logger = logging.getLogger(__name__)


class SearchMap:
    """Shared store of what the UAVs know about the area.

    Per cell it records whether a UAV has visited it, whether a threat or a
    target has been seen there, and which UAV (if any) has claimed it as its
    next destination. Cells are addressed by ``(ix, iy)`` indices.
    """

    NO_CLAIM = -1

    def __init__(self, grid: GridConfig):
        self.grid = grid
        shape = (grid.cells, grid.cells)
        self.visited = np.zeros(shape, dtype=bool)
        self.threat_known = np.zeros(shape, dtype=bool)
        self.target_found = np.zeros(shape, dtype=bool)
        self.claims = np.full(shape, self.NO_CLAIM, dtype=np.int64)
        self.duplicate_claims = 0

    def visit(self, cell: tuple[int, int]) -> bool:
        """Mark ``cell`` visited; True the first time."""
        first = not self.visited[cell]
        self.visited[cell] = True
        return bool(first)

    def claimant(self, cell: tuple[int, int]) -> int | None:
        uav = int(self.claims[cell])
        return None if uav == self.NO_CLAIM else uav

    def claim(self, cell: tuple[int, int], uav: int) -> None:
        current = self.claimant(cell)
        if current is not None and current != uav:
            self.duplicate_claims += 1
            logger.warning(f"UAV {uav} claimed cell {cell} already claimed by UAV {current}")
        self.claims[cell] = uav

    def release(self, cell: tuple[int, int], uav: int) -> None:
        if self.claimant(cell) == uav:
            self.claims[cell] = self.NO_CLAIM

    @property
    def coverage(self) -> float:
        return float(self.visited.mean())

    def to_dict(self) -> dict[str, Any]:
        def cells(flags: np.ndarray) -> list[list[float]]:
            return [list(self.grid.centre(int(ix), int(iy))) for ix, iy in np.argwhere(flags)]

        return {
            **self.grid.to_dict(),
            "visited": cells(self.visited),
            "threats_known": cells(self.threat_known),
            "targets_found": cells(self.target_found),
            "claims": {
                f"{x:g},{y:g}": int(self.claims[ix, iy])
                for ix, iy in np.argwhere(self.claims != self.NO_CLAIM)
                for x, y in [self.grid.centre(int(ix), int(iy))]
            },
            "coverage": self.coverage,
        }
