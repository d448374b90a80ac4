from argparse import ArgumentTypeError
from pathlib import Path

from django.conf import settings

from missioncheck.commands import MissionCheckCommand
from missioncheck.dubins.planner import WORD_SETS
from missioncheck.dubins.planner import Pose
from missioncheck.dubins.planner import plan
from missioncheck.dubins.planner import sample
from missioncheck.utils import fixed


def pose_argument(text: str) -> Pose:
    try:
        return Pose.parse(text)
    except ValueError as exc:
        raise ArgumentTypeError(str(exc)) from None


class Command(MissionCheckCommand):
    help = "Plan the shortest Dubins path between two poses and print it as s,x,y,theta samples."

    def add_arguments(self, parser):
        parser.add_argument("--start", type=pose_argument, required=True, help="x,y,theta (radians)")
        parser.add_argument("--end", type=pose_argument, required=True, help="x,y,theta (radians)")
        parser.add_argument("--radius", type=float, default=None, help="minimum turning radius in metres")
        parser.add_argument("--step", type=float, default=10.0, help="sampling step in metres")
        parser.add_argument("--words", choices=sorted(WORD_SETS), default=None)
        parser.add_argument("--out", type=Path, help="write the CSV here instead of stdout")

    def run(self, *args, **options) -> int:
        radius = options["radius"] if options["radius"] is not None else settings.MISSION_TURN_RADIUS_M
        words = WORD_SETS[options["words"] or settings.DUBINS_WORDS]
        path = plan(options["start"], options["end"], radius, words)
        rows = ["s,x,y,theta"]
        rows.extend(
            f"{fixed(s)},{fixed(pose.x)},{fixed(pose.y)},{fixed(pose.theta)}"
            for s, pose in sample(path, options["step"])
        )
        text = "\n".join(rows) + "\n"
        if options["out"] is not None:
            options["out"].parent.mkdir(parents=True, exist_ok=True)
            options["out"].write_text(text, encoding="utf-8")
            self.emit(f"{path.word} path of length {path.length:.6f} m written to {options['out']}")
        else:
            self.stdout.write(text, ending="")
        return 0
