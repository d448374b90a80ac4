import pytest

from missioncheck.checker.exceptions import TraceFormatError
from missioncheck.checker.exceptions import TraceValidationError
from missioncheck.checker.traces import Trace
from missioncheck.checker.traces import lasso_within
from missioncheck.checker.traces import shortest_path_to
from missioncheck.checker.traces import validate_trace
from missioncheck.kripke.explicit import ExplicitKripke


@pytest.fixture
def diamond() -> ExplicitKripke:
    # 0 -> {1, 2} -> 3 -> 3
    return ExplicitKripke.from_successors([[1, 2], [3], [3], [3]], [0], {"goal": [3], "left": [1]})


def test_shortest_path_prefers_smallest_states(diamond):
    assert shortest_path_to(diamond, diamond.mask_of([0]), diamond.label("goal")) == [0, 1, 3]


def test_shortest_path_respects_through(diamond):
    through = ~diamond.label("left")
    assert shortest_path_to(diamond, diamond.mask_of([0]), diamond.label("goal"), through=through) == [0, 2, 3]


def test_shortest_path_unreachable(diamond):
    assert shortest_path_to(diamond, diamond.mask_of([3]), diamond.mask_of([0])) is None


def test_lasso_within(diamond):
    path, start = lasso_within(diamond, 0, diamond.mask_of([0, 2, 3]))
    assert path == [0, 2, 3]
    assert start == 2


def test_json_round_trip(diamond, tmp_path):
    trace = Trace.from_states(diamond, [0, 1, 3], lasso_start=2)
    path = trace.write(tmp_path / "traces" / "t.json")
    again = Trace.read(path)
    assert again == trace
    assert again.model == {"kind": "explicit"}
    assert path.read_text(encoding="utf-8") == trace.to_json()


@pytest.mark.parametrize(
    ("states", "lasso_start", "message"),
    [
        ([1, 3], None, "non-initial"),
        ([0, 3], None, "No transition between steps 0 and 1"),
        ([0, 1], 0, "No back edge"),
        ([0, 9], None, "not a state of the model"),
    ],
)
def test_validate_rejects(diamond, states, lasso_start, message):
    trace = Trace.from_dict(
        {"steps": [{"index": k, "state_code": s} for k, s in enumerate(states)], "lasso_start": lasso_start},
    )
    with pytest.raises(TraceValidationError, match=message):
        validate_trace(diamond, trace)


def test_validate_checks_the_final_state(diamond):
    trace = Trace.from_states(diamond, [0, 1])
    with pytest.raises(TraceValidationError, match="does not violate"):
        validate_trace(diamond, trace, final_violates=diamond.label("goal"))


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"steps": []}',
        '{"steps": [{"index": 1, "state_code": 0}]}',
        '{"steps": [{"index": 0}]}',
        '{"steps": [{"index": 0, "state_code": 0}], "lasso_start": 4}',
    ],
)
def test_malformed_documents(text):
    with pytest.raises(TraceFormatError):
        Trace.from_json(text)
