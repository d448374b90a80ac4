import math
from dataclasses import dataclass

from django.conf import settings


@dataclass(frozen=True)
class GridConfig:
    """Square search area of ``cells`` x ``cells`` square cells.

    Cells are addressed by integer indices ``(ix, iy)`` with ``(0, 0)`` in the
    south-west corner, or by the metre coordinates of their centres.
    """

    cells: int = 20
    cell_size: float = 100.0

    def __post_init__(self):
        if self.cells < 2:
            msg = f"A grid needs at least 2 cells per side, got {self.cells}"
            raise ValueError(msg)
        if not self.cell_size > 0:
            msg = f"Cell size must be positive, got {self.cell_size}"
            raise ValueError(msg)

    @classmethod
    def from_settings(cls, cells: int | None = None, cell_size: float | None = None) -> "GridConfig":
        return cls(
            cells=cells if cells is not None else settings.MISSION_GRID_CELLS,
            cell_size=cell_size if cell_size is not None else settings.MISSION_CELL_SIZE_M,
        )

    @property
    def area_side(self) -> float:
        return self.cells * self.cell_size

    @property
    def origin(self) -> tuple[float, float]:
        return self.centre(0, 0)

    @property
    def min_centre(self) -> float:
        return self.cell_size / 2

    @property
    def max_centre(self) -> float:
        return self.cell_size / 2 + (self.cells - 1) * self.cell_size

    @property
    def num_cells(self) -> int:
        return self.cells * self.cells

    def in_bounds(self, ix: int, iy: int) -> bool:
        return 0 <= ix < self.cells and 0 <= iy < self.cells

    def centre(self, ix: int, iy: int) -> tuple[float, float]:
        return (self.cell_size / 2 + ix * self.cell_size, self.cell_size / 2 + iy * self.cell_size)

    def index_of(self, x: float, y: float) -> tuple[int, int]:
        """Indices of the cell whose centre is ``(x, y)``."""
        fx = (x - self.cell_size / 2) / self.cell_size
        fy = (y - self.cell_size / 2) / self.cell_size
        ix, iy = round(fx), round(fy)
        if not (math.isclose(fx, ix, abs_tol=1e-9) and math.isclose(fy, iy, abs_tol=1e-9)):
            msg = f"({x:g}, {y:g}) is not a cell centre"
            raise ValueError(msg)
        if not self.in_bounds(ix, iy):
            msg = f"({x:g}, {y:g}) lies outside the {self.area_side:g} m search area"
            raise ValueError(msg)
        return ix, iy

    def cell_containing(self, x: float, y: float) -> tuple[int, int] | None:
        """Indices of the cell containing the point, ``None`` outside the area."""
        ix, iy = math.floor(x / self.cell_size), math.floor(y / self.cell_size)
        return (ix, iy) if self.in_bounds(ix, iy) else None

    def to_dict(self) -> dict[str, float | int]:
        return {"grid": self.cells, "cell_size": self.cell_size}
