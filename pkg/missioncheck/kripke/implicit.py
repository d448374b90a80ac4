import logging
import threading
from collections.abc import Callable
from collections.abc import Mapping
from collections.abc import Sequence
from typing import Any

import numpy as np

from .base import KripkeModel
from .base import gather_rows
from .exceptions import InvalidModelError
from .exceptions import UnknownPropositionError
from .explicit import ExplicitKripke

logger = logging.getLogger(__name__)


class ImplicitKripke(KripkeModel):
    """Factored structure: state ``core * num_inputs + input``.

    ``step[core, input]`` is the next core; the next input is free, so
    ``(c, i) -> (step[c, i], i')`` for every ``i'``. Labels are tables of shape
    ``(num_cores, num_inputs)``. Predecessors depend only on the target core and
    are cached per core on first use.
    """

    def __init__(
        self,
        step: np.ndarray,
        labels: Mapping[str, np.ndarray],
        initial: np.ndarray,
        core_names: Sequence[str] | None = None,
        input_namer: Callable[[int], str] | None = None,
        metadata: Mapping[str, Any] | None = None,
    ):
        self._step = np.asarray(step, dtype=np.int64)
        if self._step.ndim != 2 or 0 in self._step.shape:
            msg = "step table must be a non-empty (cores, inputs) array"
            raise InvalidModelError(msg)
        self.num_cores, self.num_inputs = self._step.shape
        if self._step.min() < 0 or self._step.max() >= self.num_cores:
            msg = "step table points outside the core range"
            raise InvalidModelError(msg)
        self._labels = {name: np.asarray(table, dtype=bool).reshape(self._step.shape) for name, table in labels.items()}
        self._initial = np.asarray(initial, dtype=bool).reshape(self.num_cores * self.num_inputs)
        if not self._initial.any():
            msg = "The initial-state set is empty"
            raise InvalidModelError(msg)
        if core_names is None:
            core_names = [f"c{core}" for core in range(self.num_cores)]
        self._core_names = tuple(core_names)
        self._input_namer = input_namer or str
        self.metadata = dict(metadata or {"kind": "implicit"})
        self._pred_lock = threading.Lock()
        self._pred_indptr: np.ndarray | None = None
        self._pred_states: np.ndarray | None = None

    @property
    def num_states(self) -> int:
        return self.num_cores * self.num_inputs

    @property
    def propositions(self) -> tuple[str, ...]:
        return tuple(self._labels)

    @property
    def initial(self) -> np.ndarray:
        return self._initial

    @property
    def step_table(self) -> np.ndarray:
        return self._step

    def encode(self, core: int, inp: int) -> int:
        return core * self.num_inputs + inp

    def decode(self, state: int) -> tuple[int, int]:
        self._check_state(state)
        core, inp = divmod(state, self.num_inputs)
        return core, inp

    def core_name(self, core: int) -> str:
        return self._core_names[core]

    def label(self, name: str) -> np.ndarray:
        try:
            return self._labels[name].ravel()
        except KeyError:
            raise UnknownPropositionError([name]) from None

    def labels_of(self, state: int) -> tuple[str, ...]:
        core, inp = self.decode(state)
        return tuple(name for name, table in self._labels.items() if table[core, inp])

    def successors(self, state: int) -> np.ndarray:
        core, inp = self.decode(state)
        target = int(self._step[core, inp])
        return np.arange(target * self.num_inputs, (target + 1) * self.num_inputs, dtype=np.int64)

    def _predecessor_index(self) -> tuple[np.ndarray, np.ndarray]:
        if self._pred_indptr is None:
            with self._pred_lock:
                if self._pred_indptr is None:
                    flat = self._step.ravel()
                    order = np.argsort(flat, kind="stable")
                    indptr = np.zeros(self.num_cores + 1, dtype=np.int64)
                    np.cumsum(np.bincount(flat, minlength=self.num_cores), out=indptr[1:])
                    self._pred_states = order.astype(np.int64, copy=False)
                    self._pred_indptr = indptr
                    logger.debug(f"Cached predecessors for {self.num_cores} cores")
        return self._pred_indptr, self._pred_states  # type: ignore[return-value]

    def predecessors(self, state: int) -> np.ndarray:
        core, _ = self.decode(state)
        indptr, states = self._predecessor_index()
        return states[indptr[core] : indptr[core + 1]]

    def predecessors_of(self, states: np.ndarray) -> np.ndarray:
        indptr, pred_states = self._predecessor_index()
        cores = np.unique(np.asarray(states, dtype=np.int64) // self.num_inputs)
        return gather_rows(indptr, pred_states, cores)

    def pre_exists(self, mask: np.ndarray) -> np.ndarray:
        core_hit = mask.reshape(self.num_cores, self.num_inputs).any(axis=1)
        return core_hit[self._step].ravel()

    def post_image(self, mask: np.ndarray) -> np.ndarray:
        reached = np.zeros(self.num_cores, dtype=bool)
        reached[self._step.ravel()[mask]] = True
        return np.repeat(reached, self.num_inputs)

    def has_edge(self, source: int, target: int) -> bool:
        core, inp = self.decode(source)
        self._check_state(target)
        return int(self._step[core, inp]) == target // self.num_inputs

    def state_name(self, state: int) -> str:
        core, inp = self.decode(state)
        return f"{self._core_names[core]}_{self._input_namer(inp)}"

    def materialize(self) -> ExplicitKripke:
        """Expand into an explicit model with the same state numbering."""
        num_states = self.num_states
        targets = self._step.ravel()
        indptr = np.arange(0, (num_states + 1) * self.num_inputs, self.num_inputs, dtype=np.int64)
        indices = (targets[:, None] * self.num_inputs + np.arange(self.num_inputs)).ravel()
        names = [self.state_name(state) for state in range(num_states)]
        propositions = self.propositions
        label_matrix = np.zeros((num_states, len(propositions)), dtype=bool)
        for column, name in enumerate(propositions):
            label_matrix[:, column] = self.label(name)
        logger.info(f"Materializing {self.describe()} into {indices.size} explicit edges")
        return ExplicitKripke(names, indptr, indices, self._initial, propositions, label_matrix, self.metadata)
