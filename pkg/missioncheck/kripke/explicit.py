import logging
from collections.abc import Iterable
from collections.abc import Mapping
from collections.abc import Sequence
from typing import Any

import numpy as np

from .base import KripkeModel
from .base import gather_rows
from .exceptions import InvalidModelError
from .exceptions import UnknownPropositionError

logger = logging.getLogger(__name__)


def _csr_from_rows(rows: Sequence[Iterable[int]]) -> tuple[np.ndarray, np.ndarray]:
    sorted_rows = [np.unique(np.fromiter(row, dtype=np.int64)) for row in rows]
    lengths = np.fromiter((row.size for row in sorted_rows), dtype=np.int64, count=len(sorted_rows))
    indptr = np.zeros(len(sorted_rows) + 1, dtype=np.int64)
    np.cumsum(lengths, out=indptr[1:])
    indices = np.concatenate(sorted_rows) if sorted_rows else np.empty(0, dtype=np.int64)
    return indptr, indices.astype(np.int64, copy=False)


def _transpose(indptr: np.ndarray, indices: np.ndarray, num_states: int) -> tuple[np.ndarray, np.ndarray]:
    sources = np.repeat(np.arange(num_states, dtype=np.int64), np.diff(indptr))
    # stable sort on targets keeps sources ascending inside every reverse row
    order = np.argsort(indices, kind="stable")
    counts = np.bincount(indices, minlength=num_states)
    reverse_indptr = np.zeros(num_states + 1, dtype=np.int64)
    np.cumsum(counts, out=reverse_indptr[1:])
    return reverse_indptr, sources[order]


class ExplicitKripke(KripkeModel):
    """Kripke structure with stored edges in compressed sparse row form.

    ``label_matrix`` is the per-state bitset over the proposition registry: row
    ``s`` column ``k`` is set when ``propositions[k]`` holds in ``s``.
    """

    def __init__(
        self,
        state_names: Sequence[str],
        indptr: np.ndarray,
        indices: np.ndarray,
        initial: np.ndarray,
        propositions: Sequence[str],
        label_matrix: np.ndarray,
        metadata: Mapping[str, Any] | None = None,
    ):
        num_states = len(state_names)
        self._names = tuple(state_names)
        self._indptr = np.asarray(indptr, dtype=np.int64)
        self._indices = np.asarray(indices, dtype=np.int64)
        self._initial = np.asarray(initial, dtype=bool)
        self._propositions = tuple(propositions)
        self._label_matrix = np.asarray(label_matrix, dtype=bool).reshape(num_states, len(self._propositions))
        self._prop_index = {name: k for k, name in enumerate(self._propositions)}
        self.metadata = dict(metadata or {"kind": "explicit"})
        self._validate()
        self._reverse_indptr, self._reverse_indices = _transpose(self._indptr, self._indices, num_states)
        logger.debug(f"Built {self.describe()} with {self._indices.size} edges")

    @classmethod
    def from_successors(
        cls,
        successors: Sequence[Iterable[int]],
        initial: Iterable[int],
        labels: Mapping[str, Iterable[int]] | None = None,
        state_names: Sequence[str] | None = None,
        propositions: Sequence[str] | None = None,
        metadata: Mapping[str, Any] | None = None,
    ) -> "ExplicitKripke":
        """Build from successor lists, a list of initial states and ``{prop: states}``."""
        num_states = len(successors)
        labels = dict(labels or {})
        names = list(propositions) if propositions is not None else []
        names += [name for name in labels if name not in names]
        label_matrix = np.zeros((num_states, len(names)), dtype=bool)
        for column, name in enumerate(names):
            label_matrix[np.fromiter(labels.get(name, ()), dtype=np.int64), column] = True
        initial_mask = np.zeros(num_states, dtype=bool)
        initial_mask[np.fromiter(initial, dtype=np.int64)] = True
        indptr, indices = _csr_from_rows(successors)
        if state_names is None:
            state_names = [f"s{index}" for index in range(num_states)]
        return cls(state_names, indptr, indices, initial_mask, names, label_matrix, metadata)

    def _validate(self) -> None:
        num_states = len(self._names)
        if num_states == 0:
            msg = "A Kripke model needs at least one state"
            raise InvalidModelError(msg)
        if len(set(self._names)) != num_states:
            msg = "State names must be unique"
            raise InvalidModelError(msg)
        if self._indptr.shape != (num_states + 1,) or self._initial.shape != (num_states,):
            msg = "Adjacency or initial mask does not match the state count"
            raise InvalidModelError(msg)
        if self._indices.size and (self._indices.min() < 0 or self._indices.max() >= num_states):
            msg = "Edge target out of range"
            raise InvalidModelError(msg)
        if not self._initial.any():
            msg = "The initial-state set is empty"
            raise InvalidModelError(msg)
        dead_ends = np.flatnonzero(np.diff(self._indptr) == 0)
        if dead_ends.size:
            msg = f"State {self._names[dead_ends[0]]} has no successor (transition relation must be total)"
            raise InvalidModelError(msg)
        if len(set(self._propositions)) != len(self._propositions):
            msg = "Proposition names must be unique"
            raise InvalidModelError(msg)

    @property
    def num_states(self) -> int:
        return len(self._names)

    @property
    def num_edges(self) -> int:
        return int(self._indices.size)

    @property
    def propositions(self) -> tuple[str, ...]:
        return self._propositions

    @property
    def initial(self) -> np.ndarray:
        return self._initial

    @property
    def state_names(self) -> tuple[str, ...]:
        return self._names

    @property
    def label_matrix(self) -> np.ndarray:
        return self._label_matrix

    def label(self, name: str) -> np.ndarray:
        try:
            return self._label_matrix[:, self._prop_index[name]]
        except KeyError:
            raise UnknownPropositionError([name]) from None

    def labels_of(self, state: int) -> tuple[str, ...]:
        self._check_state(state)
        return tuple(name for name, flag in zip(self._propositions, self._label_matrix[state], strict=True) if flag)

    def successors(self, state: int) -> np.ndarray:
        self._check_state(state)
        return self._indices[self._indptr[state] : self._indptr[state + 1]]

    def predecessors(self, state: int) -> np.ndarray:
        self._check_state(state)
        return self._reverse_indices[self._reverse_indptr[state] : self._reverse_indptr[state + 1]]

    def predecessors_of(self, states: np.ndarray) -> np.ndarray:
        return gather_rows(self._reverse_indptr, self._reverse_indices, states)

    def pre_exists(self, mask: np.ndarray) -> np.ndarray:
        # every row is non-empty, so reduceat never sees an empty segment
        return np.logical_or.reduceat(mask[self._indices], self._indptr[:-1])

    def post_image(self, mask: np.ndarray) -> np.ndarray:
        result = self.empty_mask()
        result[gather_rows(self._indptr, self._indices, np.flatnonzero(mask))] = True
        return result

    def state_name(self, state: int) -> str:
        self._check_state(state)
        return self._names[state]

    def state_index(self, name: str) -> int:
        try:
            return self._names.index(name)
        except ValueError:
            msg = f"Unknown state {name!r}"
            raise KeyError(msg) from None

    def edges(self) -> list[tuple[int, int]]:
        sources = np.repeat(np.arange(self.num_states), np.diff(self._indptr))
        return list(zip(sources.tolist(), self._indices.tolist(), strict=True))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExplicitKripke):
            return NotImplemented
        if (
            self._names != other._names
            or set(self._propositions) != set(other._propositions)
            or not np.array_equal(self._indptr, other._indptr)
            or not np.array_equal(self._indices, other._indices)
            or not np.array_equal(self._initial, other._initial)
        ):
            return False
        return all(np.array_equal(self.label(name), other.label(name)) for name in self._propositions)

    __hash__ = None  # type: ignore[assignment]
