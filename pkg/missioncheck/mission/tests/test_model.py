import numpy as np
import pytest

from missioncheck.checker.satisfaction import sat
from missioncheck.mission.constants import PROPOSITIONS
from missioncheck.mission.decision import DEADLOCK_SINK
from missioncheck.mission.decision import CellChoice
from missioncheck.mission.decision import EnvValuation
from missioncheck.mission.decision import Heading
from missioncheck.mission.decision import MissionState
from missioncheck.mission.decision import decide_next_cell
from missioncheck.mission.decision import destination
from missioncheck.mission.grid import GridConfig
from missioncheck.mission.model import MissionEncoding
from missioncheck.mission.model import build_mission_kripke
from missioncheck.mission.specs import builtin_specs
from missioncheck.mission.specs import extended_specs


@pytest.fixture(scope="module")
def mission2():
    return build_mission_kripke(GridConfig(cells=2, cell_size=100.0))


def test_state_count(mission2):
    assert mission2.num_states == (2 * 4 + 1) * 1024 == 9216
    assert set(mission2.propositions) == set(PROPOSITIONS)


def test_initial_states_cover_every_environment(mission2):
    initial = mission2.initial_states
    assert initial.tolist() == list(range(1024))
    assert mission2.metadata["initial_cell"] == [50.0, 50.0]
    assert mission2.metadata["initial_heading"] == 90


def test_encoding_round_trip(grid2):
    encoding = MissionEncoding(grid2)
    state = MissionState((150.0, 50.0), Heading.DEG270, EnvValuation.from_code(777))
    code = encoding.encode(state)
    assert code == ((1 * 2 + 0) * 2 + 1) * 1024 + 777
    assert encoding.decode(code) == state
    assert encoding.decode(encoding.encode(DEADLOCK_SINK)) is DEADLOCK_SINK
    with pytest.raises(ValueError, match="does not belong"):
        encoding.decode(9 * 1024 + 5 + 1024)


def test_transitions_follow_the_decision_layer(mission2, grid2):
    encoding = mission2.encoding
    for state_code in range(0, encoding.sink_core * 1024, 37):
        state = encoding.decode(state_code)
        choice = decide_next_cell(state, grid2)
        successors = mission2.successors(state_code)
        assert successors.size == 1024
        if choice is CellChoice.NO_FREE_CELL:
            assert encoding.decode(int(successors[0])) is DEADLOCK_SINK
        else:
            cell, heading = destination(state, choice, grid2)
            following = encoding.decode(int(successors[0]))
            assert (following.cell, following.heading) == (cell, heading)
        assert mission2.labels_of(state_code).count(choice.label) == 1


def test_sink_is_absorbing(mission2):
    sink_state = mission2.encoding.sink_core * 1024 + 3
    assert all(mission2.encoding.decode(int(s)) is DEADLOCK_SINK for s in mission2.successors(sink_state))
    labels = mission2.labels_of(sink_state)
    assert "at_sink" in labels
    assert not any(label.startswith("choice_") for label in labels)


def test_materialized_model_agrees(mission2):
    explicit = mission2.materialize()
    for entry in (*builtin_specs(), *extended_specs()):
        assert sat(explicit, entry.formula) == sat(mission2, entry.formula), entry.id


def test_south_row_turns_east():
    grid = GridConfig(cells=3, cell_size=100.0)
    model = build_mission_kripke(grid, initial_cell=(150.0, 150.0), initial_heading=Heading.DEG270)
    encoding = model.encoding
    # cell4 (east) and cell5 (west) are both free
    state_code = encoding.core_of(1, 0, Heading.DEG270) * 1024
    following = encoding.decode(int(model.successors(state_code)[0]))
    assert following.cell == (250.0, 50.0)
    assert following.heading is Heading.DEG90
    assert np.flatnonzero(model.initial).min() == encoding.core_of(1, 1, Heading.DEG270) * 1024
