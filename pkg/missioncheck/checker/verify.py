import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Any

import numpy as np

from missioncheck.ctl.formula import AG
from missioncheck.ctl.formula import EG
from missioncheck.ctl.formula import EU
from missioncheck.ctl.formula import EX
from missioncheck.ctl.formula import Formula
from missioncheck.ctl.formula import Not
from missioncheck.ctl.normal_form import to_existential_normal_form
from missioncheck.ctl.printer import print_formula
from missioncheck.kripke.base import KripkeModel

from .satisfaction import Labeller
from .satisfaction import SatSet
from .traces import Trace
from .traces import lasso_within
from .traces import shortest_path_to
from .traces import validate_trace

logger = logging.getLogger(__name__)


@dataclass
class Verdict:
    holds: bool
    sat_set: SatSet
    trace: Trace | None = None
    failing_initial: tuple[int, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict[str, Any]:
        return {
            "holds": self.holds,
            "satisfying_states": len(self.sat_set),
            "failing_initial": list(self.failing_initial),
            "trace": self.trace.to_dict() if self.trace is not None else None,
        }


def _invariant_counterexample(model: KripkeModel, labeller: Labeller, invariant: Formula) -> Trace:
    bad = ~labeller.evaluate(to_existential_normal_form(invariant))
    path = shortest_path_to(model, model.initial.copy(), bad)
    trace = Trace.from_states(model, path)
    validate_trace(model, trace, final_violates=bad)
    return trace


def _existential_witness(model: KripkeModel, labeller: Labeller, start: int, formula: Formula) -> Trace | None:
    """Witness that ``start`` satisfies the existential ``formula``."""
    match formula:
        case EX(arg=arg):
            target = labeller.evaluate(arg)
            successors = model.successors(start)
            trace = Trace.from_states(model, [start, int(successors[target[successors]].min())])
            validate_trace(model, trace, final_violates=target)
            return trace
        case EU(left=left, right=right):
            target = labeller.evaluate(right)
            path = shortest_path_to(model, model.mask_of([start]), target, through=labeller.evaluate(left))
            if path is None:
                return None
            trace = Trace.from_states(model, path)
            validate_trace(model, trace, final_violates=target)
            return trace
        case EG():
            region = labeller.evaluate(formula)
            path, lasso_start = lasso_within(model, start, region)
            trace = Trace.from_states(model, path, lasso_start)
            validate_trace(model, trace)
            return trace
    return None


def verify(model: KripkeModel, formula: Formula) -> Verdict:
    """Decide whether every initial state of ``model`` satisfies ``formula``.

    On failure a counterexample is attached when the formula is ``AG p`` with
    ``p`` propositional (a shortest path to a ``!p`` state) or when its
    existential form is the negation of ``EX``, ``EU`` or ``EG`` (a witness of
    the negation from the smallest failing initial state). Otherwise only the
    failing initial states are reported.
    """
    model.check_propositions(formula.atoms())
    labeller = Labeller(model)
    enf = to_existential_normal_form(formula)
    satisfied = labeller.evaluate(enf)
    failing = np.flatnonzero(model.initial & ~satisfied)
    verdict = Verdict(holds=failing.size == 0, sat_set=SatSet(satisfied.copy()))
    logger.info(
        f"{print_formula(formula)}: {'holds' if verdict.holds else 'fails'} "
        f"({len(verdict.sat_set)}/{model.num_states} states satisfy it)",
    )
    if verdict.holds:
        return verdict
    verdict.failing_initial = tuple(failing.tolist())
    if isinstance(formula, AG) and formula.arg.is_propositional:
        verdict.trace = _invariant_counterexample(model, labeller, formula.arg)
    elif isinstance(enf, Not) and isinstance(enf.arg, EX | EU | EG):
        verdict.trace = _existential_witness(model, labeller, int(failing[0]), enf.arg)
    if verdict.trace is not None:
        logger.info(f"Counterexample with {len(verdict.trace)} steps, lasso start {verdict.trace.lasso_start}")
    return verdict
