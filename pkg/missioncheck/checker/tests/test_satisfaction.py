import numpy as np
import pytest

from missioncheck.checker.satisfaction import Labeller
from missioncheck.checker.satisfaction import SatSet
from missioncheck.checker.satisfaction import sat
from missioncheck.conftest import brute_force_sat
from missioncheck.conftest import random_formula
from missioncheck.conftest import random_model
from missioncheck.ctl.formula import AF
from missioncheck.ctl.formula import Atom
from missioncheck.ctl.normal_form import to_existential_normal_form
from missioncheck.ctl.parser import parse_formula
from missioncheck.kripke.exceptions import UnknownPropositionError
from missioncheck.kripke.explicit import ExplicitKripke


@pytest.fixture
def lasso() -> ExplicitKripke:
    # s0 -> s1 -> s2 -> s1, s0 -> s3 -> s3
    return ExplicitKripke.from_successors(
        [[1, 3], [2], [1], [3]],
        [0],
        {"p": [0, 1, 2], "q": [2], "r": [3]},
    )


@pytest.mark.parametrize(
    ("text", "states"),
    [
        ("p", {0, 1, 2}),
        ("EX q", {1}),
        ("AX p", {1, 2}),
        ("EF r", {0, 3}),
        ("AF q", {1, 2}),
        ("EG p", {0, 1, 2}),
        ("AG p", {1, 2}),
        ("E [ p U r ]", {0, 3}),
        ("A [ p U q ]", {1, 2}),
        ("AG EF q", {1, 2}),
        ("true", {0, 1, 2, 3}),
        ("false", set()),
    ],
)
def test_sat_on_a_small_model(lasso, text, states):
    assert sat(lasso, parse_formula(text)).to_set() == states


def test_sat_matches_brute_force_on_random_models():
    rng = np.random.default_rng(2024)
    mismatches = 0
    for _ in range(500):
        model = random_model(rng)
        formula = random_formula(rng, depth=int(rng.integers(0, 5)))
        expected = brute_force_sat(model, formula)
        if sat(model, formula).to_set() != expected:
            mismatches += 1
        if sat(model, to_existential_normal_form(formula)).to_set() != expected:
            mismatches += 1
    assert mismatches == 0


def test_unknown_proposition(lasso):
    with pytest.raises(UnknownPropositionError) as info:
        sat(lasso, AF(Atom("missing")))
    assert info.value.names == ("missing",)


def test_labeller_memoises_read_only_results(lasso):
    labeller = Labeller(lasso)
    formula = to_existential_normal_form(parse_formula("EG p"))
    first = labeller.evaluate(formula)
    assert labeller.evaluate(formula) is first
    assert not first.flags.writeable


def test_satset_operations():
    a = SatSet(np.array([True, False, True]))
    b = SatSet(np.array([True, True, False]))
    assert (a & b).to_set() == {0}
    assert (a | b).to_set() == {0, 1, 2}
    assert (~a).to_set() == {1}
    assert len(a) == 2
    assert 2 in a
    assert 1 not in a
    assert a.width == 3
    assert a == SatSet(np.array([True, False, True]))
