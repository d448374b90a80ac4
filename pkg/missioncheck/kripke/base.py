"""Common interface of the Kripke structures the checker runs on.

States are dense integers ``0 .. num_states - 1``. State sets travel as numpy
boolean masks of length ``num_states``; every model is immutable once built.
"""

from abc import ABC
from abc import abstractmethod
from collections.abc import Iterable
from typing import Any

import numpy as np

from .exceptions import UnknownPropositionError

EMPTY_INDICES = np.empty(0, dtype=np.int64)


def gather_rows(indptr: np.ndarray, indices: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Concatenate the CSR rows ``rows`` of ``(indptr, indices)`` without a Python loop."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return EMPTY_INDICES
    starts = indptr[rows]
    lengths = indptr[rows + 1] - starts
    total = int(lengths.sum())
    if total == 0:
        return EMPTY_INDICES
    offsets = np.repeat(starts - np.cumsum(lengths) + lengths, lengths) + np.arange(total)
    return indices[offsets]


class KripkeModel(ABC):
    """A finite structure (S, R, L) with a total transition relation."""

    #: Free-form description carried into serialized traces.
    metadata: dict[str, Any]

    @property
    @abstractmethod
    def num_states(self) -> int: ...

    @property
    @abstractmethod
    def propositions(self) -> tuple[str, ...]: ...

    @property
    @abstractmethod
    def initial(self) -> np.ndarray:
        """Boolean mask of the initial states."""

    @abstractmethod
    def label(self, name: str) -> np.ndarray:
        """Boolean mask of the states labelled with ``name``."""

    @abstractmethod
    def successors(self, state: int) -> np.ndarray:
        """Sorted successor indices of ``state``."""

    @abstractmethod
    def predecessors(self, state: int) -> np.ndarray:
        """Sorted predecessor indices of ``state``."""

    @abstractmethod
    def predecessors_of(self, states: np.ndarray) -> np.ndarray:
        """Predecessors of every state in ``states``, concatenated (may repeat)."""

    @abstractmethod
    def pre_exists(self, mask: np.ndarray) -> np.ndarray:
        """States with at least one successor inside ``mask``."""

    @abstractmethod
    def post_image(self, mask: np.ndarray) -> np.ndarray:
        """States reachable in one step from ``mask``."""

    @abstractmethod
    def state_name(self, state: int) -> str: ...

    def has_edge(self, source: int, target: int) -> bool:
        successors = self.successors(source)
        position = np.searchsorted(successors, target)
        return bool(position < successors.size and successors[position] == target)

    @property
    def initial_states(self) -> np.ndarray:
        return np.flatnonzero(self.initial)

    def check_propositions(self, names: Iterable[str]) -> None:
        missing = set(names) - set(self.propositions)
        if missing:
            raise UnknownPropositionError(missing)

    def labels_of(self, state: int) -> tuple[str, ...]:
        self._check_state(state)
        return tuple(name for name in self.propositions if self.label(name)[state])

    def empty_mask(self) -> np.ndarray:
        return np.zeros(self.num_states, dtype=bool)

    def mask_of(self, states: Iterable[int]) -> np.ndarray:
        mask = self.empty_mask()
        mask[np.fromiter(states, dtype=np.int64)] = True
        return mask

    def describe(self) -> str:
        return (
            f"{type(self).__name__}(states={self.num_states}, "
            f"initial={int(self.initial.sum())}, propositions={len(self.propositions)})"
        )

    def _check_state(self, state: int) -> None:
        if not 0 <= state < self.num_states:
            msg = f"State {state} out of range 0..{self.num_states - 1}"
            raise IndexError(msg)
