import json

import pytest

from missioncheck.mission.decision import Heading
from missioncheck.mission.grid import GridConfig
from missioncheck.sim.exceptions import ScenarioError
from missioncheck.sim.scenario import Scenario
from missioncheck.sim.tests.factories import ScenarioFactory
from missioncheck.sim.tests.factories import UavStartFactory


def test_from_json_applies_defaults():
    scenario = Scenario.from_json(json.dumps({"grid": 4, "uavs": [{"id": 3, "cell": [150, 50]}]}))
    assert scenario.grid == GridConfig(4, 100.0)
    assert scenario.uavs[0].heading is Heading.DEG90
    assert scenario.speed == 20.0
    assert scenario.turn_radius == 25.0
    assert scenario.duration == 600.0


def test_to_dict_round_trip():
    scenario = ScenarioFactory(threats=frozenset({(350.0, 450.0)}), targets=frozenset({(750.0, 750.0)}))
    assert Scenario.from_dict(scenario.to_dict()) == scenario


def test_resolved_draws_are_seed_stable():
    scenario = ScenarioFactory(seed=11, random_threats=6, random_targets=2)
    first, second = scenario.resolved(), scenario.resolved()
    assert first.threats == second.threats
    assert len(first.threats) == 6
    assert len(first.targets) == 2
    assert not first.threats & scenario.initial_cells
    assert first.random_threats == 0


@pytest.mark.parametrize(
    ("overrides", "message"),
    [
        ({"uavs": ()}, "at least one UAV"),
        ({"uavs": (UavStartFactory.build(id=1), UavStartFactory.build(id=1, cell=(150.0, 50.0)))}, "unique"),
        ({"uavs": (UavStartFactory.build(id=1), UavStartFactory.build(id=2))}, "distinct"),
        ({"threats": frozenset({(50.0, 50.0)})}, "starts on threat"),
        ({"threats": frozenset({(60.0, 50.0)})}, "threat cell"),
        ({"speed": 0.0}, "positive"),
        ({"random_threats": 64}, "Cannot draw 64"),
    ],
)
def test_validation(overrides, message):
    with pytest.raises(ScenarioError, match=message):
        ScenarioFactory(**overrides)


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("{", "not valid JSON"),
        ("[]", "JSON object"),
        ('{"grid": 4}', "Malformed scenario"),
        ('{"uavs": [{"id": 0, "cell": [50]}]}', "Malformed scenario"),
        ('{"uavs": [{"id": 0, "cell": [50, 50], "heading": 180}]}', "Malformed scenario"),
    ],
)
def test_malformed_documents(text, message):
    with pytest.raises(ScenarioError, match=message):
        Scenario.from_json(text)


def test_read_missing_file(tmp_path):
    with pytest.raises(ScenarioError, match="cannot read scenario"):
        Scenario.read(tmp_path / "absent.json")
