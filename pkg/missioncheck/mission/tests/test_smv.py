import numpy as np
import pytest

from missioncheck.mission.constants import PROPOSITIONS
from missioncheck.mission.exceptions import SmvSyntaxError
from missioncheck.mission.model import build_mission_kripke
from missioncheck.mission.smv import emit_smv
from missioncheck.mission.smv import parse_smv
from missioncheck.mission.smv import smv_to_mission_kripke
from missioncheck.mission.specs import builtin_specs


def test_emitted_module_layout(grid2):
    text = emit_smv(grid2)
    assert "MODULE main" in text
    assert "  current_cell : array 1..2 of {50, 150};" in text
    assert "  init(current_cell) := [50 , 50];" in text
    assert "  north_edge := current_cell[2]=150;" in text
    assert text.count("\nSPEC ") == len(builtin_specs())


def test_emission_is_stable(grid2):
    assert emit_smv(grid2) == emit_smv(grid2)


def test_parsed_specs(grid2):
    module = parse_smv(emit_smv(grid2))
    assert [(name, formula) for name, formula in module.specs] == [
        (entry.id, entry.formula) for entry in builtin_specs()
    ]
    assert module.state_variables == ["current_cell", "initial_heading", "halted"]
    assert len(module.input_variables) == 10


def test_enumerated_module_equals_the_built_model(grid2):
    built = build_mission_kripke(grid2)
    parsed = smv_to_mission_kripke(parse_smv(emit_smv(grid2)), grid2)
    assert np.array_equal(parsed.step_table, built.step_table)
    assert np.array_equal(parsed.initial, built.initial)
    for name in PROPOSITIONS:
        assert np.array_equal(parsed.label(name), built.label(name)), name
    assert parsed.metadata == built.metadata


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("MODULE main\nVAR\n  x : boolean;\nASSIGN\n  init(x) := ;\n", "line 5"),
        ("MODULE main\nVAR\n  x : boolean;\nSPEC AG (x\n", "line 4"),
    ],
)
def test_syntax_errors(text, message):
    with pytest.raises(SmvSyntaxError, match=message):
        parse_smv(text)
