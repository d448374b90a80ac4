import numpy as np
import pytest

from missioncheck.conftest import random_formula
from missioncheck.ctl.formula import AG
from missioncheck.ctl.formula import AU
from missioncheck.ctl.formula import And
from missioncheck.ctl.formula import Atom
from missioncheck.ctl.formula import Implies
from missioncheck.ctl.formula import Not
from missioncheck.ctl.parser import parse_formula
from missioncheck.ctl.printer import print_formula


def test_print_is_fully_parenthesised():
    formula = AG(Implies(And(Atom("p"), Not(Atom("q"))), AU(Atom("p"), Atom("r"))))
    assert print_formula(formula) == "AG (((p & !(q)) -> A [ p U r ]))"


def test_round_trip_on_random_formulas():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        formula = random_formula(rng, depth=int(rng.integers(0, 6)))
        assert parse_formula(print_formula(formula)) == formula


@pytest.mark.parametrize(
    "text",
    ["AG (p -> AF q)", "E [ !p U (q | r) ]", "!!p", "true -> false", "EG EX AX p"],
)
def test_printing_parsed_text_is_stable(text):
    printed = print_formula(parse_formula(text))
    assert print_formula(parse_formula(printed)) == printed
