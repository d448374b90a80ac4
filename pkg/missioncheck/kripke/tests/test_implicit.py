import numpy as np
import pytest

from missioncheck.kripke.exceptions import InvalidModelError
from missioncheck.kripke.implicit import ImplicitKripke


@pytest.fixture
def toggle() -> ImplicitKripke:
    # two cores, two inputs: input 1 flips the core, input 0 keeps it
    step = np.array([[0, 1], [1, 0]])
    labels = {"on": np.array([[False, False], [True, True]])}
    initial = np.array([[True, True], [False, False]])
    return ImplicitKripke(step, labels, initial, core_names=["off", "on"])


def test_state_layout(toggle):
    assert toggle.num_states == 4
    assert toggle.encode(1, 0) == 2
    assert toggle.decode(3) == (1, 1)
    assert toggle.state_name(3) == "on_1"


def test_successors_cover_every_input(toggle):
    assert toggle.successors(1).tolist() == [2, 3]
    assert toggle.successors(0).tolist() == [0, 1]


def test_predecessors(toggle):
    assert toggle.predecessors(2).tolist() == [1, 2]
    assert sorted(toggle.predecessors_of(np.array([0, 1])).tolist()) == [0, 3]


def test_pre_exists_and_post_image(toggle):
    on = toggle.label("on")
    assert toggle.pre_exists(on).tolist() == [False, True, True, False]
    assert toggle.post_image(toggle.mask_of([1])).tolist() == [False, False, True, True]


def test_has_edge(toggle):
    assert toggle.has_edge(1, 3)
    assert not toggle.has_edge(0, 2)


def test_materialize_agrees(toggle):
    explicit = toggle.materialize()
    assert explicit.num_states == toggle.num_states
    for state in range(toggle.num_states):
        assert explicit.successors(state).tolist() == toggle.successors(state).tolist()
        assert explicit.predecessors(state).tolist() == sorted(toggle.predecessors(state).tolist())
        assert explicit.labels_of(state) == toggle.labels_of(state)
    assert explicit.initial.tolist() == toggle.initial.tolist()


@pytest.mark.parametrize(
    ("step", "initial", "message"),
    [
        (np.zeros((0, 2)), np.zeros(0), "non-empty"),
        (np.array([[0, 2], [1, 0]]), np.ones(4), "outside the core range"),
        (np.array([[0, 1], [1, 0]]), np.zeros(4), "initial-state set is empty"),
    ],
)
def test_invalid(step, initial, message):
    with pytest.raises(InvalidModelError, match=message):
        ImplicitKripke(step, {}, initial)


def test_predecessors_are_the_transposed_successors(rng):
    for _ in range(50):
        cores, inputs = int(rng.integers(1, 6)), int(rng.integers(1, 5))
        step = rng.integers(0, cores, size=(cores, inputs))
        initial = np.zeros((cores, inputs), dtype=bool)
        initial[0, 0] = True
        model = ImplicitKripke(step, {}, initial)
        explicit = model.materialize()
        reverse = {state: [] for state in range(model.num_states)}
        for source in range(model.num_states):
            assert explicit.successors(source).tolist() == model.successors(source).tolist()
            for target in model.successors(source).tolist():
                reverse[target].append(source)
        for state in range(model.num_states):
            assert sorted(model.predecessors(state).tolist()) == reverse[state]
            assert explicit.predecessors(state).tolist() == reverse[state]
