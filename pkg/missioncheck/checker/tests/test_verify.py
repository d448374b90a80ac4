import pytest

from missioncheck.checker.traces import validate_trace
from missioncheck.checker.verify import verify
from missioncheck.ctl.parser import parse_formula
from missioncheck.kripke.explicit import ExplicitKripke


@pytest.fixture
def lasso() -> ExplicitKripke:
    return ExplicitKripke.from_successors(
        [[1, 3], [2], [1], [3]],
        [0],
        {"p": [0, 1, 2], "q": [2], "r": [3]},
    )


def test_holds_without_trace(lasso):
    verdict = verify(lasso, parse_formula("EF r"))
    assert verdict.holds
    assert verdict.trace is None
    assert verdict.failing_initial == ()


def test_invariant_counterexample_is_a_shortest_path(lasso):
    verdict = verify(lasso, parse_formula("AG p"))
    assert not verdict.holds
    assert verdict.trace.states == (0, 3)
    assert verdict.trace.lasso_start is None
    assert "p" not in verdict.trace.steps[-1].props


def test_eventually_counterexample_is_a_lasso(lasso):
    verdict = verify(lasso, parse_formula("AF q"))
    assert not verdict.holds
    assert verdict.trace.states == (0, 3)
    assert verdict.trace.lasso_start == 1
    validate_trace(lasso, verdict.trace)


def test_next_counterexample(lasso):
    verdict = verify(lasso, parse_formula("AX p"))
    assert verdict.trace.states == (0, 3)


def test_until_counterexample(lasso):
    verdict = verify(lasso, parse_formula("A [ p U q ]"))
    assert not verdict.holds
    assert verdict.failing_initial == (0,)


def test_existential_failure_reports_failing_states(lasso):
    verdict = verify(lasso, parse_formula("EX q"))
    assert not verdict.holds
    assert verdict.trace is None
    assert verdict.failing_initial == (0,)


def test_to_dict(lasso):
    data = verify(lasso, parse_formula("AG p")).to_dict()
    assert data["holds"] is False
    assert data["satisfying_states"] == 2
    assert [step["state"] for step in data["trace"]["steps"]] == ["s0", "s3"]
