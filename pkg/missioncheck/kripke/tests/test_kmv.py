import pytest

from missioncheck.conftest import random_model
from missioncheck.kripke.exceptions import ModelFormatError
from missioncheck.kripke.kmv import load_kmv
from missioncheck.kripke.kmv import read_kmv
from missioncheck.kripke.kmv import save_kmv

MODEL = """
# traffic light
prop broken
state red stop
state green go
state amber stop   # comment after a declaration
init red
edge red green
edge green amber
edge amber red
"""


def test_load():
    model = load_kmv(MODEL)
    assert model.state_names == ("red", "green", "amber")
    assert model.initial_states.tolist() == [0]
    assert model.successors(2).tolist() == [0]
    assert model.labels_of(1) == ("go",)
    assert set(model.propositions) == {"broken", "stop", "go"}
    assert not model.label("broken").any()


def test_save_then_load_is_identity():
    model = load_kmv(MODEL)
    assert load_kmv(save_kmv(model)) == model


def test_random_models_survive_save_and_load(rng):
    for _ in range(100):
        model = random_model(rng)
        loaded = load_kmv(save_kmv(model))
        assert loaded == model
        assert loaded.state_names == model.state_names
        assert loaded.edges() == model.edges()
        assert loaded.initial_states.tolist() == model.initial_states.tolist()
        assert [loaded.labels_of(s) for s in range(loaded.num_states)] == [
            model.labels_of(s) for s in range(model.num_states)
        ]


def test_read(tmp_path):
    path = tmp_path / "light.kmv"
    path.write_text(MODEL, encoding="utf-8")
    assert read_kmv(path).num_states == 3


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("", "no states"),
        ("state a\nedge a a\n", "no initial state"),
        ("state a\nstate a\ninit a\nedge a a\n", "line 2: duplicate state id 'a'"),
        ("state a\ninit b\nedge a a\n", "line 2: undeclared state 'b'"),
        ("state a\ninit a\nedge a c\n", "line 3: undeclared state 'c'"),
        ("state a\ninit a\n", "has no successor"),
        ("state 1a\n", "invalid state identifier"),
        ("node a\n", "unknown keyword 'node'"),
        ("state a\ninit a\nedge a\n", "edge line takes exactly two state ids"),
    ],
)
def test_format_errors(text, message):
    with pytest.raises(ModelFormatError, match=message):
        load_kmv(text)


def test_deadlock_selfloop():
    model = load_kmv("state a p\nstate b\ninit a\nedge a b\n", allow_deadlock_selfloop=True)
    assert model.successors(1).tolist() == [1]
