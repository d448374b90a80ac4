import pytest

from missioncheck.mission.config import MissionConfig
from missioncheck.mission.config import parse_config_text
from missioncheck.mission.config import read_config_file
from missioncheck.mission.config import resolve_mission_config
from missioncheck.mission.decision import Heading
from missioncheck.mission.exceptions import ConfigFileError


def test_parse_config_text():
    values = parse_config_text(
        "# mission\ngrid = 8\ncell_size = 50\ninitial_cell = 25, 75  # second row\ninitial_heading = 270\n",
    )
    assert values == {
        "grid": 8,
        "cell_size": 50.0,
        "initial_cell": (25.0, 75.0),
        "initial_heading": Heading.DEG270,
    }


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("grid 8\n", "line 1: expected 'key = value'"),
        ("\naltitude = 100\n", "line 2: unknown key 'altitude'"),
        ("grid = eight\n", "invalid value"),
        ("initial_cell = 1,2,3\n", "two coordinates"),
        ("initial_heading = 180\n", "90 or 270"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(ConfigFileError, match=message):
        parse_config_text(text)


def test_defaults_come_from_settings(settings):
    settings.MISSION_GRID_CELLS = 6
    config = resolve_mission_config()
    assert config.grid.cells == 6
    assert config.initial_cell == (50.0, 50.0)
    assert config.initial_heading is Heading.DEG90


def test_flags_override_file_override_settings(tmp_path):
    path = tmp_path / "mission.cfg"
    path.write_text("grid = 8\ncell_size = 50\nspeed = 15\n", encoding="utf-8")
    config = resolve_mission_config(path, grid=4, initial_heading=270)
    assert config.grid.cells == 4
    assert config.grid.cell_size == 50.0
    assert config.initial_cell == (25.0, 25.0)
    assert config.initial_heading is Heading.DEG270
    assert config.speed == 15.0


def test_missing_file(tmp_path):
    with pytest.raises(ConfigFileError, match="cannot read config file"):
        read_config_file(tmp_path / "absent.cfg")


def test_initial_cell_must_be_a_centre():
    with pytest.raises(ValueError, match="not a cell centre"):
        MissionConfig.from_settings().with_overrides(initial_cell=(60.0, 50.0))


def test_to_dict():
    config = MissionConfig.from_settings().with_overrides(grid=4)
    assert config.to_dict() == {
        "grid": 4,
        "cell_size": 100.0,
        "initial_cell": [50.0, 50.0],
        "initial_heading": 90,
        "speed": 20.0,
        "turn_radius": 25.0,
    }
