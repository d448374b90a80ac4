"""Per-run mission configuration.

Values come from Django settings, then from an optional ``key = value`` file,
then from command-line flags, each layer overriding the previous one::

    # mission.cfg
    grid = 8
    cell_size = 100
    initial_cell = 50,50
    initial_heading = 90
    speed = 20
    turn_radius = 25
"""

import logging
from dataclasses import dataclass
from dataclasses import replace
from pathlib import Path
from typing import Any

import environ
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from .decision import Heading
from .exceptions import ConfigFileError
from .grid import GridConfig

logger = logging.getLogger(__name__)

CONFIG_KEYS = ("grid", "cell_size", "initial_cell", "initial_heading", "speed", "turn_radius")


class _FileEnv(environ.Env):
    """django-environ casting over the keys of a config file instead of ``os.environ``."""

    def __init__(self, values: dict[str, str]):
        super().__init__()
        self.ENVIRON = values


@dataclass(frozen=True)
class MissionConfig:
    grid: GridConfig
    initial_cell: tuple[float, float]
    initial_heading: Heading = Heading.DEG90
    speed: float = 20.0
    turn_radius: float = 25.0

    def __post_init__(self):
        self.grid.index_of(*self.initial_cell)
        if not self.speed > 0 or not self.turn_radius > 0:
            msg = "speed and turn_radius must be positive"
            raise ValueError(msg)

    @classmethod
    def from_settings(cls) -> "MissionConfig":
        grid = GridConfig.from_settings()
        return cls(
            grid=grid,
            initial_cell=grid.origin,
            speed=settings.MISSION_SPEED_MPS,
            turn_radius=settings.MISSION_TURN_RADIUS_M,
        )

    def with_overrides(self, **overrides: Any) -> "MissionConfig":
        """Copy with every non-``None`` override applied.

        ``grid`` and ``cell_size`` rebuild the grid; the initial cell then falls
        back to the new origin unless it is overridden as well.
        """
        overrides = {key: value for key, value in overrides.items() if value is not None}
        unknown = set(overrides) - set(CONFIG_KEYS)
        if unknown:
            msg = f"Unknown configuration key(s): {', '.join(sorted(unknown))}"
            raise ConfigFileError(msg)
        grid = self.grid
        if "grid" in overrides or "cell_size" in overrides:
            grid = GridConfig(overrides.get("grid", grid.cells), overrides.get("cell_size", grid.cell_size))
        initial_cell = overrides.get("initial_cell")
        if initial_cell is None:
            initial_cell = grid.origin if grid != self.grid else self.initial_cell
        return replace(
            self,
            grid=grid,
            initial_cell=tuple(float(v) for v in initial_cell),
            initial_heading=Heading.parse(overrides.get("initial_heading", self.initial_heading)),
            speed=float(overrides.get("speed", self.speed)),
            turn_radius=float(overrides.get("turn_radius", self.turn_radius)),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.grid.to_dict(),
            "initial_cell": list(self.initial_cell),
            "initial_heading": self.initial_heading.value,
            "speed": self.speed,
            "turn_radius": self.turn_radius,
        }


def parse_config_text(text: str) -> dict[str, Any]:
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        key, sep, value = content.partition("=")
        key = key.strip().lower()
        if not sep or not key:
            msg = f"expected 'key = value', got {content!r}"
            raise ConfigFileError(msg, lineno)
        if key not in CONFIG_KEYS:
            msg = f"unknown key {key!r} (known: {', '.join(CONFIG_KEYS)})"
            raise ConfigFileError(msg, lineno)
        raw[key] = value.strip()

    env = _FileEnv(raw)
    typed: dict[str, Any] = {}
    try:
        if "grid" in raw:
            typed["grid"] = env.int("grid")
        for key in ("cell_size", "speed", "turn_radius"):
            if key in raw:
                typed[key] = env.float(key)
        if "initial_cell" in raw:
            cell = env.list("initial_cell", cast=float)
            if len(cell) != 2:
                msg = f"initial_cell needs two coordinates, got {raw['initial_cell']!r}"
                raise ConfigFileError(msg)
            typed["initial_cell"] = (cell[0], cell[1])
        if "initial_heading" in raw:
            typed["initial_heading"] = Heading.parse(env.int("initial_heading"))
    except (ValueError, ImproperlyConfigured) as exc:
        msg = f"invalid value: {exc}"
        raise ConfigFileError(msg) from exc
    return typed


def read_config_file(path: Path) -> dict[str, Any]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        msg = f"cannot read config file {path}: {exc.strerror}"
        raise ConfigFileError(msg) from exc
    values = parse_config_text(text)
    logger.debug(f"Loaded {sorted(values)} from {path}")
    return values


def resolve_mission_config(config_file: Path | None = None, **flags: Any) -> MissionConfig:
    """Settings, overridden by ``config_file``, overridden by ``flags``."""
    config = MissionConfig.from_settings()
    if config_file is not None:
        config = config.with_overrides(**read_config_file(config_file))
    return config.with_overrides(**flags)
