"""Seeded random-threat safety runs.

Every run puts ``uavs`` UAVs into a grid with ``threats`` randomly placed
threat cells and counts samples inside threat cells, duplicate claims and
deadlocks. Runs are split into chunks that Celery can spread over workers.
"""

import hashlib
import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Any

from celery import group

from missioncheck.mission.decision import Heading
from missioncheck.mission.grid import GridConfig

from .engine import run
from .export import export_csv
from .scenario import Scenario
from .scenario import UavStart

logger = logging.getLogger(__name__)

DEFAULT_OPTIONS = {"grid": 8, "threats": 8, "uavs": 2, "duration": 600.0}


def campaign_options(**overrides: Any) -> dict[str, Any]:
    options = dict(DEFAULT_OPTIONS)
    options.update({key: value for key, value in overrides.items() if value is not None})
    return options


def safety_scenario(seed: int, options: dict[str, Any]) -> Scenario:
    """UAVs spread along the south edge heading north, threats drawn from ``seed``."""
    grid = GridConfig.from_settings(int(options["grid"]))
    count = int(options["uavs"])
    if not 0 < count <= grid.cells:
        msg = f"Cannot place {count} UAVs on the south edge of a {grid.cells}x{grid.cells} grid"
        raise ValueError(msg)
    stride = grid.cells // count
    uavs = tuple(UavStart(k, grid.centre(k * stride, 0), Heading.DEG90) for k in range(count))
    return Scenario(
        grid=grid,
        uavs=uavs,
        duration=float(options["duration"]),
        seed=seed,
        random_threats=int(options["threats"]),
    )


@dataclass
class CampaignTotals:
    runs: int = 0
    threat_entries: int = 0
    duplicate_claims: int = 0
    deadlocks: int = 0
    digests: list[str] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return self.threat_entries + self.duplicate_claims

    @property
    def digest(self) -> str:
        return hashlib.sha256("".join(self.digests).encode()).hexdigest()

    def add(self, chunk: dict[str, Any]) -> None:
        self.runs += chunk["runs"]
        self.threat_entries += chunk["threat_entries"]
        self.duplicate_claims += chunk["duplicate_claims"]
        self.deadlocks += chunk["deadlocks"]
        self.digests.append(chunk["digest"])

    def to_dict(self) -> dict[str, Any]:
        return {
            "runs": self.runs,
            "threat_entries": self.threat_entries,
            "duplicate_claims": self.duplicate_claims,
            "deadlocks": self.deadlocks,
            "digest": self.digest,
        }


def run_chunk(seeds: list[int], options: dict[str, Any]) -> dict[str, Any]:
    """Counts over the runs of ``seeds`` and a digest of their trajectories."""
    digest = hashlib.sha256()
    totals = {"runs": 0, "threat_entries": 0, "duplicate_claims": 0, "deadlocks": 0}
    for seed in seeds:
        result = run(safety_scenario(seed, options))
        digest.update(export_csv(result.tracks).encode())
        totals["runs"] += 1
        totals["threat_entries"] += result.threat_entries
        totals["duplicate_claims"] += result.search_map.duplicate_claims
        totals["deadlocks"] += result.deadlocks
        if result.threat_entries or result.search_map.duplicate_claims:
            logger.warning(f"Seed {seed} violated safety: {result.summary()}")
    return {**totals, "digest": digest.hexdigest()}


def split_seeds(runs: int, chunk_size: int, first_seed: int = 0) -> list[list[int]]:
    if runs < 0 or chunk_size <= 0:
        msg = "runs must be non-negative and chunk_size positive"
        raise ValueError(msg)
    seeds = list(range(first_seed, first_seed + runs))
    return [seeds[start : start + chunk_size] for start in range(0, runs, chunk_size)]


def run_campaign(runs: int, options: dict[str, Any], chunk_size: int = 250, first_seed: int = 0) -> CampaignTotals:
    """Dispatch the chunks as a Celery group and add up their results in seed order."""
    from .tasks import run_safety_chunk_task  # noqa: PLC0415

    chunks = split_seeds(runs, chunk_size, first_seed)
    totals = CampaignTotals()
    if chunks:
        job = group(run_safety_chunk_task.s(chunk, options) for chunk in chunks)
        for chunk_result in job.apply_async().get():
            totals.add(chunk_result)
    logger.info(f"Safety campaign over {totals.runs} runs: {totals.to_dict()}")
    return totals
