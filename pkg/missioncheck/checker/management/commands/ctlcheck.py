from pathlib import Path

from django.core.management.base import CommandError

from missioncheck.checker.report import check_spec
from missioncheck.checker.report import exit_status
from missioncheck.checker.report import report_json
from missioncheck.checker.report import result_line
from missioncheck.checker.report import write_trace
from missioncheck.commands import INPUT_ERROR
from missioncheck.commands import MissionCheckCommand
from missioncheck.ctl.exceptions import FormulaSyntaxError
from missioncheck.ctl.parser import parse_formula
from missioncheck.kripke.exceptions import ModelFormatError
from missioncheck.kripke.kmv import read_kmv
from missioncheck.mission.model import build_mission_kripke
from missioncheck.mission.specs import SpecEntry
from missioncheck.mission.specs import parse_catalogue


class Command(MissionCheckCommand):
    help = "Check CTL formulas against a .kmv model or the mission model."

    def add_arguments(self, parser):
        parser.add_argument("model", nargs="?", type=Path, help="explicit model in .kmv format")
        parser.add_argument("--mission", action="store_true", help="check the mission model instead of a file")
        self.add_mission_arguments(parser)
        parser.add_argument("--spec", action="append", default=[], help="CTL formula (repeatable)")
        parser.add_argument("--spec-file", type=Path, help="catalogue with one 'id: formula # expected' per line")
        parser.add_argument("--json", action="store_true", help="print a JSON report instead of SPEC lines")
        parser.add_argument("--allow-deadlock-selfloop", action="store_true")
        parser.add_argument("--out-dir", type=Path, help="directory for counterexample traces")

    def specs(self, options) -> list[SpecEntry]:
        entries = []
        for number, text in enumerate(options["spec"], start=1):
            try:
                entries.append(SpecEntry(f"F{number}", parse_formula(text)))
            except FormulaSyntaxError as exc:
                msg = f"--spec {text!r}: {exc}"
                raise CommandError(msg, returncode=INPUT_ERROR) from exc
        if options["spec_file"] is not None:
            text = options["spec_file"].read_text(encoding="utf-8")
            try:
                entries += parse_catalogue(text, id_prefix="C")
            except FormulaSyntaxError as exc:
                msg = f"{options['spec_file']}: {exc}"
                raise CommandError(msg, returncode=INPUT_ERROR) from exc
        if not entries:
            msg = "give at least one --spec or a --spec-file"
            raise CommandError(msg, returncode=INPUT_ERROR)
        return entries

    def load_model(self, options):
        if options["mission"] == (options["model"] is not None):
            msg = "give either a model file or --mission"
            raise CommandError(msg, returncode=INPUT_ERROR)
        if options["mission"]:
            config = self.mission_config(options)
            return build_mission_kripke(config.grid, config.initial_cell, config.initial_heading)
        path = options["model"]
        try:
            return read_kmv(path, allow_deadlock_selfloop=options["allow_deadlock_selfloop"])
        except ModelFormatError as exc:
            msg = f"{path}: {exc}"
            raise CommandError(msg, returncode=INPUT_ERROR) from exc

    def run(self, *args, **options) -> int:
        model = self.load_model(options)
        entries = self.specs(options)
        for entry in entries:
            model.check_propositions(entry.formula.atoms())
        results = [check_spec(model, entry.id, entry.formula, entry.expected) for entry in entries]
        out_dir = self.output_dir(options)
        traces = {result["id"]: write_trace(result, out_dir) for result in results}
        if options["json"]:
            self.emit(report_json(model, results, traces))
        else:
            for result in results:
                self.emit(result_line(result, traces[result["id"]]))
        return exit_status(results)
