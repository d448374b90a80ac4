import logging

from celery import shared_task
from django.conf import settings
from django.core.cache import cache

from missioncheck.checker.report import check_spec

from .constants import VERDICT_CACHE_PREFIX
from .decision import Heading
from .grid import GridConfig
from .model import build_mission_kripke
from .specs import select_specs

logger = logging.getLogger(__name__)


def verdict_cache_key(grid_cells, spec_ids, initial_cell=None, initial_heading=90, cell_size=None):
    cell = "origin" if initial_cell is None else "_".join(f"{value:g}" for value in initial_cell)
    size = "default" if cell_size is None else f"{cell_size:g}"
    return f"{VERDICT_CACHE_PREFIX}_{grid_cells}_{size}_{cell}_{initial_heading}_{'-'.join(spec_ids)}"


@shared_task(ignore_result=False)
def verify_mission_specs_task(grid_cells, spec_ids, initial_cell=None, initial_heading=90, cell_size=None):
    """
    Build the mission model and check the catalogue entries ``spec_ids``.
    The JSON summary is returned and also kept in the Django cache.
    """
    logger.info(f"[MISSION] Verifying {', '.join(spec_ids)} on a {grid_cells}x{grid_cells} grid")

    cache_key = verdict_cache_key(grid_cells, spec_ids, initial_cell, initial_heading, cell_size)

    try:
        grid = GridConfig.from_settings(grid_cells, cell_size)
        model = build_mission_kripke(
            grid,
            tuple(initial_cell) if initial_cell is not None else None,
            Heading.parse(initial_heading),
        )
        results = [check_spec(model, entry.id, entry.formula, entry.expected) for entry in select_specs(spec_ids)]
        summary = {"model": model.metadata, "results": results}

        cache.set(cache_key, summary, timeout=settings.MISSION_VERDICT_CACHE_TTL)

        logger.info(f"[MISSION] Done. Verdicts cached under {cache_key}")

        return summary

    except Exception as e:
        logger.error(f"[MISSION] Verification failed: {e}")
        raise
