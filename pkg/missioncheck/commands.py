"""Base class of the missioncheck management commands.

Exit codes: 0 when every verdict is the expected one, 1 when a property is
violated (or a safety run failed), 2 on malformed input. Argument errors exit
2 through argparse.
"""

import logging
from argparse import ArgumentTypeError
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from missioncheck.exceptions import MissionCheckError
from missioncheck.mission.config import MissionConfig
from missioncheck.mission.config import resolve_mission_config
from missioncheck.mission.decision import Heading

logger = logging.getLogger(__name__)

INPUT_ERROR = 2
VIOLATION = 1


def cell_argument(text: str) -> tuple[float, float]:
    """argparse type for ``x,y``."""
    parts = text.split(",")
    try:
        x, y = (float(part) for part in parts)
    except ValueError:
        msg = f"expected 'x,y', got {text!r}"
        raise ArgumentTypeError(msg) from None
    return x, y


class MissionCheckCommand(BaseCommand):
    requires_system_checks = []

    def handle(self, *args, **options):
        try:
            status = self.run(*args, **options)
        except CommandError:
            raise
        except OSError as exc:
            name = exc.filename if exc.filename is not None else ""
            msg = f"cannot access {name}: {exc.strerror}" if name else str(exc)
            raise CommandError(msg, returncode=INPUT_ERROR) from exc
        except (MissionCheckError, ValueError, KeyError) as exc:
            msg = str(exc.args[0]) if isinstance(exc, KeyError) and exc.args else str(exc)
            raise CommandError(msg, returncode=INPUT_ERROR) from exc
        if status:
            msg = "property violated" if status == VIOLATION else f"exit status {status}"
            raise CommandError(msg, returncode=status)

    def run(self, *args, **options) -> int:
        raise NotImplementedError

    def emit(self, line: str) -> None:
        self.stdout.write(line)

    @staticmethod
    def add_mission_arguments(parser) -> None:
        parser.add_argument("--grid", type=int, help="cells per side of the search area")
        parser.add_argument("--cell-size", type=float, help="cell side in metres")
        parser.add_argument("--initial-cell", type=cell_argument, help="start cell centre as x,y")
        parser.add_argument("--initial-heading", type=int, choices=[h.value for h in Heading])
        parser.add_argument("--config", type=Path, help="mission configuration file (key = value)")

    @staticmethod
    def mission_config(options) -> MissionConfig:
        return resolve_mission_config(
            options.get("config"),
            grid=options.get("grid"),
            cell_size=options.get("cell_size"),
            initial_cell=options.get("initial_cell"),
            initial_heading=options.get("initial_heading"),
        )

    @staticmethod
    def output_dir(options, key: str = "out_dir") -> Path:
        return Path(options.get(key) or settings.MISSIONCHECK_OUTPUT_DIR)
