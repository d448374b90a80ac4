import logging

from celery import shared_task

from .campaign import run_chunk

logger = logging.getLogger(__name__)


@shared_task(ignore_result=False)
def run_safety_chunk_task(seeds, options):
    """Run one chunk of seeded safety scenarios; the result is a JSON-ready count summary."""
    logger.info(f"[CAMPAIGN] Running seeds {seeds[0]}..{seeds[-1]} with {options}")
    try:
        summary = run_chunk(seeds, options)
        logger.info(f"[CAMPAIGN] Chunk done: {summary}")
        return summary
    except Exception as e:
        logger.error(f"[CAMPAIGN] Chunk starting at seed {seeds[0]} failed: {e}")
        raise
