import pytest
from celery.result import EagerResult
from django.core.cache import cache

from missioncheck.mission.tasks import verdict_cache_key
from missioncheck.mission.tasks import verify_mission_specs_task


@pytest.fixture(autouse=True)
def _clear_cache():
    cache.clear()
    yield
    cache.clear()


def test_verify_mission_specs(settings):
    """Run the verification task eagerly and read its summary back from the cache."""
    settings.CELERY_TASK_ALWAYS_EAGER = True
    task_result = verify_mission_specs_task.delay(2, ["S4", "S5"])
    assert isinstance(task_result, EagerResult)
    summary = task_result.result
    assert [result["holds"] for result in summary["results"]] == [True, False]
    assert all(result["matches"] for result in summary["results"])
    assert summary["results"][1]["trace"]["steps"][0]["state_code"] == 21
    assert summary["model"]["grid"] == 2
    assert cache.get(verdict_cache_key(2, ["S4", "S5"])) == summary


def test_cache_key_separates_runs():
    assert verdict_cache_key(4, ["S1"]) != verdict_cache_key(4, ["S1"], initial_cell=[150, 50])
    assert verdict_cache_key(4, ["S1"]) != verdict_cache_key(4, ["S1"], initial_heading=270)
    assert verdict_cache_key(4, ["S1"]) != verdict_cache_key(4, ["S1"], cell_size=50)
