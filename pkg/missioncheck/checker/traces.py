"""Counterexamples and witnesses.

Every trace is a path of the model, optionally closed into a lasso by an edge
from its last state back to ``states[lasso_start]``. Ties between equally short
paths always go to the smallest state index, so traces are reproducible.
"""

import json
import logging
from dataclasses import dataclass
from dataclasses import field
from pathlib import Path
from typing import Any

import numpy as np

from missioncheck.kripke.base import KripkeModel

from .exceptions import TraceFormatError
from .exceptions import TraceValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceStep:
    index: int
    state_code: int
    state: str
    props: tuple[str, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "state_code": self.state_code,
            "state": self.state,
            "props": list(self.props),
        }


@dataclass(frozen=True)
class Trace:
    steps: tuple[TraceStep, ...]
    lasso_start: int | None = None
    model: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_states(cls, model: KripkeModel, states: list[int], lasso_start: int | None = None) -> "Trace":
        steps = tuple(
            TraceStep(index, int(state), model.state_name(int(state)), model.labels_of(int(state)))
            for index, state in enumerate(states)
        )
        return cls(steps, lasso_start, dict(model.metadata))

    @property
    def states(self) -> tuple[int, ...]:
        return tuple(step.state_code for step in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def to_dict(self) -> dict[str, Any]:
        return {
            "model": self.model,
            "steps": [step.to_dict() for step in self.steps],
            "lasso_start": self.lasso_start,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Trace":
        try:
            steps = tuple(
                TraceStep(
                    index=int(raw["index"]),
                    state_code=int(raw["state_code"]),
                    state=str(raw.get("state", raw["state_code"])),
                    props=tuple(raw.get("props", ())),
                )
                for raw in data["steps"]
            )
            lasso_start = data.get("lasso_start")
            lasso_start = None if lasso_start is None else int(lasso_start)
        except (KeyError, TypeError, ValueError) as exc:
            msg = f"Malformed trace document: {exc}"
            raise TraceFormatError(msg) from exc
        if not steps:
            msg = "Trace has no steps"
            raise TraceFormatError(msg)
        if [step.index for step in steps] != list(range(len(steps))):
            msg = "Trace step indices must run 0, 1, 2, ..."
            raise TraceFormatError(msg)
        if lasso_start is not None and not 0 <= lasso_start < len(steps):
            msg = f"lasso_start {lasso_start} outside the trace"
            raise TraceFormatError(msg)
        return cls(steps, lasso_start, dict(data.get("model") or {}))

    @classmethod
    def from_json(cls, text: str) -> "Trace":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            msg = f"Trace is not valid JSON: {exc}"
            raise TraceFormatError(msg) from exc
        if not isinstance(data, dict):
            msg = "Trace document must be a JSON object"
            raise TraceFormatError(msg)
        return cls.from_dict(data)

    def write(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(), encoding="utf-8")
        logger.info(f"Trace with {len(self)} steps written to {path}")
        return path

    @classmethod
    def read(cls, path: Path) -> "Trace":
        return cls.from_json(path.read_text(encoding="utf-8"))


def validate_trace(model: KripkeModel, trace: Trace, final_violates: np.ndarray | None = None) -> None:
    """Check that ``trace`` is a path of ``model``.

    When ``final_violates`` is given, the last state must lie in it.
    """
    states = trace.states
    for state in states:
        if not 0 <= state < model.num_states:
            msg = f"Trace state {state} is not a state of the model"
            raise TraceValidationError(msg)
    if not model.initial[states[0]]:
        msg = f"Trace starts in non-initial state {model.state_name(states[0])}"
        raise TraceValidationError(msg)
    for position, (source, target) in enumerate(zip(states, states[1:], strict=False)):
        if not model.has_edge(source, target):
            msg = f"No transition between steps {position} and {position + 1}"
            raise TraceValidationError(msg)
    if trace.lasso_start is not None and not model.has_edge(states[-1], states[trace.lasso_start]):
        msg = f"No back edge from the last step to step {trace.lasso_start}"
        raise TraceValidationError(msg)
    if final_violates is not None and not final_violates[states[-1]]:
        msg = "The last state of the counterexample does not violate the property"
        raise TraceValidationError(msg)


def _smallest_predecessor(model: KripkeModel, state: int, allowed: np.ndarray) -> int:
    candidates = model.predecessors(state)
    return int(candidates[allowed[candidates]].min())


def shortest_path_to(model: KripkeModel, sources: np.ndarray, targets: np.ndarray, through: np.ndarray | None = None):
    """Shortest path from any of ``sources`` to any of ``targets``.

    Intermediate states must lie in ``through`` when given. Returns the list of
    states or ``None``. The target reached is the smallest index in the first
    layer that meets ``targets``; backtracking picks the smallest predecessor
    in the previous layer.
    """
    distance = np.full(model.num_states, -1, dtype=np.int64)
    layer = sources.copy()
    depth = 0
    distance[layer] = 0
    while True:
        hits = layer & targets
        if hits.any():
            break
        expandable = layer if through is None else layer & through
        layer = model.post_image(expandable) & (distance < 0)
        if not layer.any():
            return None
        depth += 1
        distance[layer] = depth
    current = int(np.flatnonzero(hits)[0])
    path = [current]
    for level in range(depth - 1, -1, -1):
        allowed = distance == level
        if through is not None:
            allowed &= through
        current = _smallest_predecessor(model, current, allowed)
        path.append(current)
    path.reverse()
    return path


def lasso_within(model: KripkeModel, start: int, region: np.ndarray) -> tuple[list[int], int]:
    """Walk smallest successors inside ``region`` from ``start`` until a state repeats.

    ``region`` must be closed under "has a successor in region" (an EG set).
    """
    path = [start]
    seen = {start: 0}
    current = start
    while True:
        successors = model.successors(current)
        inside = successors[region[successors]]
        current = int(inside.min())
        if current in seen:
            return path, seen[current]
        seen[current] = len(path)
        path.append(current)
