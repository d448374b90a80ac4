#!/usr/bin/env python
"""Run the missioncheck management commands (``ctlcheck``, ``mission``, ``dubins``)."""

import os
import sys


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")

    try:
        from django.core.management import execute_from_command_line  # noqa: PLC0415
    except ImportError as exc:
        msg = "Couldn't import Django. Install the project with `uv sync` and run it from its virtual environment."
        raise ImportError(msg) from exc

    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
