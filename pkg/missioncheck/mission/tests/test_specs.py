import pytest

from missioncheck.checker.report import check_spec
from missioncheck.checker.verify import verify
from missioncheck.ctl.exceptions import FormulaSyntaxError
from missioncheck.mission.decision import is_deadlock_state
from missioncheck.mission.grid import GridConfig
from missioncheck.mission.model import build_mission_kripke
from missioncheck.mission.specs import builtin_specs
from missioncheck.mission.specs import catalogue
from missioncheck.mission.specs import extended_specs
from missioncheck.mission.specs import format_catalogue
from missioncheck.mission.specs import parse_catalogue
from missioncheck.mission.specs import select_specs


@pytest.fixture(scope="module", params=[2, 3])
def mission(request):
    return build_mission_kripke(GridConfig(cells=request.param, cell_size=100.0))


def test_builtin_ids():
    assert [entry.id for entry in builtin_specs()] == ["S1", "S2", "S3_1", "S3_2", "S3_3", "S3_4", "S3_5", "S4", "S5"]


@pytest.mark.parametrize("entry", [*builtin_specs(), *extended_specs()], ids=lambda entry: entry.id)
def test_expected_verdicts(mission, entry):
    result = check_spec(mission, entry.id, entry.formula, entry.expected)
    assert result["holds"] is entry.expected
    assert result["matches"]


def test_deadlock_counterexample(mission):
    """The shortest counterexample is the initial state alone: code 21 blocks every in-bounds neighbour."""
    entry = catalogue()["S5"]
    verdict = verify(mission, entry.formula)
    assert not verdict.holds
    trace = verdict.trace
    assert len(trace) == 1
    assert trace.states == (21,)
    final = mission.encoding.decode(trace.states[-1])
    assert is_deadlock_state(final, mission.grid)
    assert "choice_no_free_cell" in trace.steps[-1].props
    assert trace.model["kind"] == "mission"


def test_select_expands_groups():
    assert [entry.id for entry in select_specs(["S3", "S5"])] == ["S3_1", "S3_2", "S3_3", "S3_4", "S3_5", "S5"]
    with pytest.raises(KeyError, match="S9"):
        select_specs(["S9"])


def test_catalogue_round_trip():
    entries = builtin_specs()
    parsed = parse_catalogue(format_catalogue(entries))
    assert [(e.id, e.formula, e.expected) for e in parsed] == [(e.id, e.formula, e.expected) for e in entries]


def test_catalogue_defaults():
    entries = parse_catalogue("# header\n\nAG p\nEF q  # reachable\nsafe: AG !r # FALSE\n")
    assert [(e.id, e.expected) for e in entries] == [("F1", None), ("F2", None), ("safe", False)]


def test_catalogue_error_names_the_line():
    with pytest.raises(FormulaSyntaxError, match="line 2"):
        parse_catalogue("AG p\nAG (p\n")


def test_catalogue_rejects_reserved_atom():
    with pytest.raises(FormulaSyntaxError, match="line 1: reserved word 'U'") as info:
        parse_catalogue("AG U\n")
    assert (info.value.span.start, info.value.span.end) == (3, 4)


def test_full_size_mission():
    mission = build_mission_kripke(GridConfig(cells=20, cell_size=100.0))
    assert mission.num_states == (2 * 20 * 20 + 1) * 1024 == 820224
    verdicts = {entry.id: verify(mission, entry.formula).holds for entry in builtin_specs()}
    assert verdicts == {
        "S1": True,
        "S2": True,
        "S3_1": True,
        "S3_2": True,
        "S3_3": True,
        "S3_4": True,
        "S3_5": True,
        "S4": True,
        "S5": False,
    }
