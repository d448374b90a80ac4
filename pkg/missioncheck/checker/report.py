"""Verdict reports shared by the command-line front ends.

A result is a JSON-ready dict so that it can travel through Celery and the
Django cache unchanged.
"""

import json
import logging
from pathlib import Path
from typing import Any

from missioncheck.ctl.formula import Formula
from missioncheck.ctl.printer import print_formula
from missioncheck.kripke.base import KripkeModel

from .traces import Trace
from .verify import verify

logger = logging.getLogger(__name__)


def check_spec(model: KripkeModel, spec_id: str, formula: Formula, expected: bool | None = None) -> dict[str, Any]:
    verdict = verify(model, formula)
    wanted = True if expected is None else expected
    return {
        "id": spec_id,
        "formula": print_formula(formula),
        "expected": expected,
        "holds": verdict.holds,
        "matches": verdict.holds == wanted,
        **{key: value for key, value in verdict.to_dict().items() if key != "holds"},
    }


def write_trace(result: dict[str, Any], trace_dir: Path) -> Path | None:
    """Write the counterexample of ``result``, if it has one, as ``<id>.trace.json``."""
    if result.get("trace") is None:
        return None
    path = Path(trace_dir) / f"{result['id']}.trace.json"
    Trace.from_dict(result["trace"]).write(path)
    return path


def result_line(result: dict[str, Any], trace_path: Path | None = None) -> str:
    line = f"SPEC {result['id']} {result['formula']} : {'TRUE' if result['holds'] else 'FALSE'}"
    if trace_path is not None:
        line += f" [trace written to {trace_path}]"
    return line


def report_json(model: KripkeModel | dict[str, Any], results: list[dict[str, Any]], trace_paths: dict) -> str:
    metadata = model if isinstance(model, dict) else model.metadata
    document = {
        "model": metadata,
        "results": [
            {
                "id": result["id"],
                "formula": result["formula"],
                "verdict": "TRUE" if result["holds"] else "FALSE",
                "expected": result["expected"],
                "matches": result["matches"],
                "satisfying_states": result["satisfying_states"],
                "failing_initial": result["failing_initial"],
                "trace": str(trace_paths[result["id"]]) if trace_paths.get(result["id"]) else None,
            }
            for result in results
        ],
    }
    return json.dumps(document, indent=2, sort_keys=True)


def exit_status(results: list[dict[str, Any]]) -> int:
    """0 when every verdict is the expected one (``TRUE`` if none is given), else 1."""
    mismatches = [result["id"] for result in results if not result["matches"]]
    if mismatches:
        logger.info(f"Unexpected verdicts for {', '.join(mismatches)}")
        return 1
    return 0
