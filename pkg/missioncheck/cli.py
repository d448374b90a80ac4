"""``missioncheck`` console entry point.

Maps ``missioncheck check|mission|dubins ...`` onto the management commands and
returns their exit status.
"""

import os
import sys

import django
from django.core.management import load_command_class

COMMANDS = {
    "check": ("missioncheck.checker", "ctlcheck"),
    "mission": ("missioncheck.mission", "mission"),
    "dubins": ("missioncheck.dubins", "dubins"),
}
USAGE = "usage: missioncheck {check,mission,dubins} [options]\n"


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] in {"-h", "--help"}:
        sys.stdout.write(USAGE)
        return 0 if argv else 2
    if argv[0] not in COMMANDS:
        sys.stderr.write(USAGE)
        sys.stderr.write(f"missioncheck: unknown command {argv[0]!r}\n")
        return 2

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")
    django.setup()
    app, name = COMMANDS[argv[0]]
    command = load_command_class(app, name)
    try:
        command.run_from_argv(["missioncheck", argv[0], *argv[1:]])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
