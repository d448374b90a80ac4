import numpy as np
import pytest

from missioncheck.ctl.formula import AF
from missioncheck.ctl.formula import AG
from missioncheck.ctl.formula import AU
from missioncheck.ctl.formula import AX
from missioncheck.ctl.formula import EF
from missioncheck.ctl.formula import EG
from missioncheck.ctl.formula import EU
from missioncheck.ctl.formula import EX
from missioncheck.ctl.formula import And
from missioncheck.ctl.formula import Atom
from missioncheck.ctl.formula import Bottom
from missioncheck.ctl.formula import Formula
from missioncheck.ctl.formula import Implies
from missioncheck.ctl.formula import Not
from missioncheck.ctl.formula import Or
from missioncheck.ctl.formula import Top
from missioncheck.kripke.explicit import ExplicitKripke
from missioncheck.mission.grid import GridConfig

PROPS = ("p", "q", "r")
UNARY = (Not, AX, EX, AF, EF, AG, EG)
BINARY = (And, Or, Implies, AU, EU)


@pytest.fixture(autouse=True)
def _output_dir(settings, tmp_path) -> None:
    settings.MISSIONCHECK_OUTPUT_DIR = tmp_path / "output"


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def grid2() -> GridConfig:
    return GridConfig(cells=2, cell_size=100.0)


def random_formula(rng: np.random.Generator, depth: int, props=PROPS) -> Formula:
    if depth == 0 or rng.random() < 0.2:
        leaf = int(rng.integers(len(props) + 2))
        if leaf == len(props):
            return Top()
        if leaf == len(props) + 1:
            return Bottom()
        return Atom(props[leaf])
    if rng.random() < 0.55:
        return UNARY[int(rng.integers(len(UNARY)))](random_formula(rng, depth - 1, props))
    operator = BINARY[int(rng.integers(len(BINARY)))]
    return operator(random_formula(rng, depth - 1, props), random_formula(rng, depth - 1, props))


def random_model(rng: np.random.Generator, max_states: int = 8, props=PROPS) -> ExplicitKripke:
    num_states = int(rng.integers(1, max_states + 1))
    successors = [
        rng.choice(num_states, size=int(rng.integers(1, num_states + 1)), replace=False).tolist()
        for _ in range(num_states)
    ]
    initial = rng.choice(num_states, size=int(rng.integers(1, num_states + 1)), replace=False).tolist()
    labels = {name: np.flatnonzero(rng.random(num_states) < 0.5).tolist() for name in props}
    return ExplicitKripke.from_successors(successors, initial, labels, propositions=props)


def brute_force_sat(model: ExplicitKripke, formula: Formula) -> set[int]:
    """Direct fixpoint semantics over Python sets, every operator on its own."""
    states = set(range(model.num_states))
    succ = {s: set(model.successors(s).tolist()) for s in states}

    def ex(target):
        return {s for s in states if succ[s] & target}

    def ax(target):
        return {s for s in states if succ[s] <= target}

    def lfp(step):
        current: set[int] = set()
        while (following := step(current)) != current:
            current = following
        return current

    def gfp(step):
        current = set(states)
        while (following := step(current)) != current:
            current = following
        return current

    def sat(node):
        match node:
            case Top():
                return set(states)
            case Bottom():
                return set()
            case Atom(name=name):
                return set(np.flatnonzero(model.label(name)).tolist())
            case Not(arg=arg):
                return states - sat(arg)
            case And(left=left, right=right):
                return sat(left) & sat(right)
            case Or(left=left, right=right):
                return sat(left) | sat(right)
            case Implies(left=left, right=right):
                return (states - sat(left)) | sat(right)
            case EX(arg=arg):
                return ex(sat(arg))
            case AX(arg=arg):
                return ax(sat(arg))
            case EF(arg=arg):
                f = sat(arg)
                return lfp(lambda z: f | ex(z))
            case AF(arg=arg):
                f = sat(arg)
                return lfp(lambda z: f | ax(z))
            case EG(arg=arg):
                f = sat(arg)
                return gfp(lambda z: f & ex(z))
            case AG(arg=arg):
                f = sat(arg)
                return gfp(lambda z: f & ax(z))
            case EU(left=left, right=right):
                f, g = sat(left), sat(right)
                return lfp(lambda z: g | (f & ex(z)))
            case AU(left=left, right=right):
                f, g = sat(left), sat(right)
                return lfp(lambda z: g | (f & ax(z)))
        msg = f"unexpected node {node!r}"
        raise TypeError(msg)

    return sat(formula)
