import json
from dataclasses import replace
from pathlib import Path

from django.core.cache import cache

from missioncheck.checker.report import exit_status
from missioncheck.checker.report import report_json
from missioncheck.checker.report import result_line
from missioncheck.checker.report import write_trace
from missioncheck.checker.traces import Trace
from missioncheck.commands import VIOLATION
from missioncheck.commands import MissionCheckCommand
from missioncheck.mission.model import build_mission_kripke
from missioncheck.mission.smv import emit_smv
from missioncheck.mission.specs import builtin_specs
from missioncheck.mission.specs import extended_specs
from missioncheck.mission.specs import select_specs
from missioncheck.mission.tasks import verdict_cache_key
from missioncheck.mission.tasks import verify_mission_specs_task
from missioncheck.sim.campaign import campaign_options
from missioncheck.sim.campaign import run_campaign
from missioncheck.sim.engine import run
from missioncheck.sim.export import export_csv
from missioncheck.sim.export import export_json
from missioncheck.sim.export import write_result
from missioncheck.sim.replay import replay
from missioncheck.sim.scenario import Scenario


class Command(MissionCheckCommand):
    help = "Build, verify, simulate and replay the multi-UAV search mission."

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest="action", required=True)

        build = actions.add_parser("build", help="build the mission model and optionally emit it as SMV")
        self.add_mission_arguments(build)
        build.add_argument("--emit-smv", type=Path, help="write the SMV module here")

        verify = actions.add_parser("verify", help="check the property catalogue on the mission model")
        self.add_mission_arguments(verify)
        verify.add_argument("--all", action="store_true", help="the five mission properties (default)")
        verify.add_argument("--extended", action="store_true", help="the reachability and liveness properties")
        verify.add_argument("--spec-id", action="append", default=[], help="catalogue id, S3 expands to S3_1..S3_5")
        verify.add_argument("--json", action="store_true")
        verify.add_argument("--out-dir", type=Path, help="directory for counterexample traces")

        simulate = actions.add_parser("simulate", help="run a multi-UAV scenario")
        simulate.add_argument("--scenario", type=Path, required=True)
        simulate.add_argument("--seed", type=int, help="override the scenario seed")
        simulate.add_argument("--duration", type=float, help="override the flying time in seconds")
        simulate.add_argument("--out", type=Path, help="output path prefix for the .csv and .json files")

        replay_parser = actions.add_parser("replay", help="fly a counterexample trace")
        replay_parser.add_argument("--trace", type=Path, required=True)
        replay_parser.add_argument("--scenario", type=Path, help="speed and turning radius to fly with")
        replay_parser.add_argument("--out", type=Path, help="output path prefix for the .csv and .json files")

        campaign = actions.add_parser("campaign", help="seeded random-threat safety runs")
        campaign.add_argument("--runs", type=int, default=10_000)
        campaign.add_argument("--chunk-size", type=int, default=250)
        campaign.add_argument("--first-seed", type=int, default=0)
        campaign.add_argument("--grid", type=int)
        campaign.add_argument("--threats", type=int)
        campaign.add_argument("--uavs", type=int)
        campaign.add_argument("--duration", type=float)
        campaign.add_argument("--json", action="store_true")

    def run(self, *args, **options) -> int:
        return getattr(self, f"run_{options['action']}")(options)

    def run_build(self, options) -> int:
        config = self.mission_config(options)
        model = build_mission_kripke(config.grid, config.initial_cell, config.initial_heading)
        self.emit(model.describe())
        if options["emit_smv"] is not None:
            path = options["emit_smv"]
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(
                emit_smv(config.grid, config.initial_cell, config.initial_heading, builtin_specs()),
                encoding="utf-8",
            )
            self.emit(f"SMV model written to {path}")
        return 0

    @staticmethod
    def spec_ids(options) -> list[str]:
        ids = list(options["spec_id"])
        if options["extended"]:
            ids += [entry.id for entry in extended_specs()]
        if options["all"] or not ids:
            ids = [entry.id for entry in builtin_specs()] + ids
        return list(dict.fromkeys(entry.id for entry in select_specs(ids)))

    def run_verify(self, options) -> int:
        config = self.mission_config(options)
        ids = self.spec_ids(options)
        arguments = (
            config.grid.cells,
            ids,
            list(config.initial_cell),
            config.initial_heading.value,
            config.grid.cell_size,
        )
        summary = cache.get(verdict_cache_key(*arguments))
        if summary is None:
            summary = verify_mission_specs_task.delay(*arguments).get()
        results = summary["results"]
        out_dir = self.output_dir(options)
        traces = {result["id"]: write_trace(result, out_dir) for result in results}
        if options["json"]:
            self.emit(report_json(summary["model"], results, traces))
        else:
            for result in results:
                self.emit(result_line(result, traces[result["id"]]))
        return exit_status(results)

    def run_simulate(self, options) -> int:
        scenario = Scenario.read(options["scenario"])
        overrides = {key: options[key] for key in ("seed", "duration") if options[key] is not None}
        if overrides:
            scenario = replace(scenario, **overrides)
        result = run(scenario)
        out = options["out"] or self.output_dir(options) / "simulation"
        csv_path, json_path = write_result(result, out)
        summary = result.summary()
        self.emit(" ".join(f"{key}={value}" for key, value in summary.items()))
        self.emit(f"trajectories written to {csv_path} and {json_path}")
        return VIOLATION if summary["threat_entries"] or summary["duplicate_claims"] else 0

    def run_replay(self, options) -> int:
        trace = Trace.read(options["trace"])
        scenario = Scenario.read(options["scenario"]) if options["scenario"] is not None else None
        track = replay(trace, scenario)
        out = Path(options["out"] or self.output_dir(options) / "replay")
        out.parent.mkdir(parents=True, exist_ok=True)
        csv_path, json_path = out.with_suffix(".csv"), out.with_suffix(".json")
        csv_path.write_text(export_csv([track]), encoding="utf-8")
        json_path.write_text(export_json([track], trace_model=trace.model), encoding="utf-8")
        ending = f"deadlocked at {track.deadlock_cell}" if track.deadlocked else f"ending at {track.cells[-1]}"
        self.emit(f"replayed {len(trace)} steps over {len(track.cells)} cells, {ending}")
        self.emit(f"trajectory written to {csv_path} and {json_path}")
        return 0

    def run_campaign(self, options) -> int:
        campaign_settings = campaign_options(
            grid=options["grid"],
            threats=options["threats"],
            uavs=options["uavs"],
            duration=options["duration"],
        )
        totals = run_campaign(options["runs"], campaign_settings, options["chunk_size"], options["first_seed"])
        if options["json"]:
            self.emit(json.dumps({"options": campaign_settings, "totals": totals.to_dict()}, indent=2, sort_keys=True))
        else:
            self.emit(" ".join(f"{key}={value}" for key, value in totals.to_dict().items()))
        return VIOLATION if totals.violations else 0
