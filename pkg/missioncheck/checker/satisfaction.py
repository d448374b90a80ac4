"""Satisfaction sets by fixpoint labelling over the existential fragment."""

import logging
from dataclasses import dataclass

import numpy as np

from missioncheck.ctl.formula import EG
from missioncheck.ctl.formula import EU
from missioncheck.ctl.formula import EX
from missioncheck.ctl.formula import And
from missioncheck.ctl.formula import Atom
from missioncheck.ctl.formula import Bottom
from missioncheck.ctl.formula import Formula
from missioncheck.ctl.formula import Not
from missioncheck.ctl.formula import Top
from missioncheck.ctl.normal_form import to_existential_normal_form
from missioncheck.kripke.base import KripkeModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SatSet:
    """States of one model satisfying a formula, as a boolean mask."""

    mask: np.ndarray

    def __len__(self) -> int:
        return int(np.count_nonzero(self.mask))

    def __contains__(self, state: int) -> bool:
        return bool(self.mask[state])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SatSet):
            return NotImplemented
        return np.array_equal(self.mask, other.mask)

    __hash__ = None  # type: ignore[assignment]

    def __and__(self, other: "SatSet") -> "SatSet":
        return SatSet(self.mask & other.mask)

    def __or__(self, other: "SatSet") -> "SatSet":
        return SatSet(self.mask | other.mask)

    def __invert__(self) -> "SatSet":
        return SatSet(~self.mask)

    @property
    def width(self) -> int:
        return int(self.mask.size)

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def to_set(self) -> set[int]:
        return set(self.indices().tolist())


class Labeller:
    """Evaluates existential-fragment formulas on one model, memoising every sub-formula."""

    def __init__(self, model: KripkeModel):
        self.model = model
        self._memo: dict[Formula, np.ndarray] = {}

    def evaluate(self, formula: Formula) -> np.ndarray:
        cached = self._memo.get(formula)
        if cached is None:
            cached = self._compute(formula)
            cached.setflags(write=False)
            self._memo[formula] = cached
        return cached

    def _compute(self, formula: Formula) -> np.ndarray:
        model = self.model
        match formula:
            case Top():
                return np.ones(model.num_states, dtype=bool)
            case Bottom():
                return model.empty_mask()
            case Atom(name=name):
                return model.label(name).copy()
            case Not(arg=arg):
                return ~self.evaluate(arg)
            case And(left=left, right=right):
                return self.evaluate(left) & self.evaluate(right)
            case EX(arg=arg):
                return model.pre_exists(self.evaluate(arg))
            case EU(left=left, right=right):
                return self._least_until(self.evaluate(left), self.evaluate(right))
            case EG(arg=arg):
                return self._greatest_globally(self.evaluate(arg))
        msg = f"{type(formula).__name__} is outside the existential fragment"
        raise TypeError(msg)

    def _least_until(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        # only the states added in the previous round are expanded
        result = right.copy()
        frontier = np.flatnonzero(result)
        bound = self.model.num_states
        iterations = 0
        while frontier.size:
            iterations += 1
            assert iterations <= bound, "EU fixpoint exceeded |S| iterations"
            added = self.model.empty_mask()
            added[self.model.predecessors_of(frontier)] = True
            added &= left
            added &= ~result
            result |= added
            frontier = np.flatnonzero(added)
        logger.debug(f"EU fixpoint reached after {iterations} rounds, {int(result.sum())} states")
        return result

    def _greatest_globally(self, operand: np.ndarray) -> np.ndarray:
        result = operand.copy()
        bound = self.model.num_states + 1
        iterations = 0
        while True:
            iterations += 1
            assert iterations <= bound, "EG fixpoint exceeded |S| iterations"
            narrowed = result & self.model.pre_exists(result)
            if np.array_equal(narrowed, result):
                break
            result = narrowed
        logger.debug(f"EG fixpoint reached after {iterations} rounds, {int(result.sum())} states")
        return result


def sat(model: KripkeModel, formula: Formula) -> SatSet:
    """Exact set of states of ``model`` satisfying ``formula``.

    Raises:
        UnknownPropositionError: when ``formula`` names a proposition the model
            does not register.
    """
    model.check_propositions(formula.atoms())
    return SatSet(Labeller(model).evaluate(to_existential_normal_form(formula)).copy())
