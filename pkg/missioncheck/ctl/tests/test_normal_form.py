import numpy as np

from missioncheck.conftest import brute_force_sat
from missioncheck.conftest import random_formula
from missioncheck.conftest import random_model
from missioncheck.ctl.formula import AF
from missioncheck.ctl.formula import AG
from missioncheck.ctl.formula import EF
from missioncheck.ctl.formula import EU
from missioncheck.ctl.formula import Atom
from missioncheck.ctl.formula import Not
from missioncheck.ctl.formula import Top
from missioncheck.ctl.normal_form import is_existential_normal_form
from missioncheck.ctl.normal_form import to_existential_normal_form
from missioncheck.ctl.parser import parse_formula

p = Atom("p")


def test_rewrites():
    assert to_existential_normal_form(EF(p)) == EU(Top(), p)
    assert to_existential_normal_form(AG(p)) == Not(EU(Top(), Not(p)))


def test_output_is_in_the_fragment():
    rng = np.random.default_rng(3)
    for _ in range(300):
        formula = random_formula(rng, depth=4)
        assert is_existential_normal_form(to_existential_normal_form(formula))


def test_fragment_is_left_alone():
    formula = parse_formula("E [ p U EX !q ] & EG r")
    assert to_existential_normal_form(formula) == formula


def test_rewrite_preserves_semantics():
    rng = np.random.default_rng(11)
    for _ in range(500):
        model = random_model(rng)
        formula = random_formula(rng, depth=3)
        assert brute_force_sat(model, formula) == brute_force_sat(model, to_existential_normal_form(formula))


def test_af_is_not_eg_not():
    assert to_existential_normal_form(AF(p)).arg.arg == Not(p)
