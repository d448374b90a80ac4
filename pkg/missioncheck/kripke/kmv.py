"""The ``.kmv`` text format.

::

    # comment
    prop unused_prop            # optional: propositions that label no state
    state s0 p q                # declaration order fixes the state numbering
    state s1
    init s0
    edge s0 s1
    edge s1 s1
"""

import logging
import re
from pathlib import Path

from .exceptions import ModelFormatError
from .explicit import ExplicitKripke

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
KEYWORDS = ("prop", "state", "init", "edge")


def _identifier(token: str, what: str, line: int) -> str:
    if not IDENTIFIER.fullmatch(token):
        msg = f"invalid {what} identifier {token!r}"
        raise ModelFormatError(msg, line)
    return token


def load_kmv(text: str, *, allow_deadlock_selfloop: bool = False) -> ExplicitKripke:
    """Parse ``.kmv`` text into an :class:`ExplicitKripke`.

    States without outgoing edges are rejected unless ``allow_deadlock_selfloop``
    turns each of them into a self-loop.
    """
    state_index: dict[str, int] = {}
    state_labels: list[list[str]] = []
    propositions: list[str] = []
    initial: list[int] = []
    pending_inits: list[tuple[str, int]] = []
    pending_edges: list[tuple[str, str, int]] = []

    def register(name: str) -> None:
        if name not in propositions:
            propositions.append(name)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        if keyword == "prop":
            for name in args:
                register(_identifier(name, "proposition", lineno))
        elif keyword == "state":
            if not args:
                msg = "state line needs an id"
                raise ModelFormatError(msg, lineno)
            name = _identifier(args[0], "state", lineno)
            if name in state_index:
                msg = f"duplicate state id {name!r}"
                raise ModelFormatError(msg, lineno)
            state_index[name] = len(state_labels)
            labels = [_identifier(prop, "proposition", lineno) for prop in args[1:]]
            for prop in labels:
                register(prop)
            state_labels.append(labels)
        elif keyword == "init":
            if len(args) != 1:
                msg = "init line takes exactly one state id"
                raise ModelFormatError(msg, lineno)
            pending_inits.append((args[0], lineno))
        elif keyword == "edge":
            if len(args) != 2:
                msg = "edge line takes exactly two state ids"
                raise ModelFormatError(msg, lineno)
            pending_edges.append((args[0], args[1], lineno))
        else:
            msg = f"unknown keyword {keyword!r} (expected one of {', '.join(KEYWORDS)})"
            raise ModelFormatError(msg, lineno)

    def resolve(name: str, lineno: int) -> int:
        try:
            return state_index[name]
        except KeyError:
            msg = f"undeclared state {name!r}"
            raise ModelFormatError(msg, lineno) from None

    if not state_index:
        msg = "model declares no states"
        raise ModelFormatError(msg)
    for name, lineno in pending_inits:
        initial.append(resolve(name, lineno))
    if not initial:
        msg = "model declares no initial state"
        raise ModelFormatError(msg)
    successors: list[set[int]] = [set() for _ in state_labels]
    for source, target, lineno in pending_edges:
        successors[resolve(source, lineno)].add(resolve(target, lineno))

    names = list(state_index)
    for index, targets in enumerate(successors):
        if targets:
            continue
        if not allow_deadlock_selfloop:
            msg = f"state {names[index]!r} has no successor (use --allow-deadlock-selfloop to add a self-loop)"
            raise ModelFormatError(msg)
        logger.info(f"Adding self-loop to successor-free state {names[index]}")
        targets.add(index)

    labels = {prop: [] for prop in propositions}
    for index, props in enumerate(state_labels):
        for prop in props:
            labels[prop].append(index)
    model = ExplicitKripke.from_successors(
        successors,
        initial,
        labels,
        state_names=names,
        propositions=propositions,
        metadata={"kind": "kmv", "states": len(names)},
    )
    logger.info(f"Loaded {model.describe()}")
    return model


def read_kmv(path: Path, *, allow_deadlock_selfloop: bool = False) -> ExplicitKripke:
    return load_kmv(path.read_text(encoding="utf-8"), allow_deadlock_selfloop=allow_deadlock_selfloop)


def save_kmv(model: ExplicitKripke) -> str:
    """Render ``model`` as ``.kmv`` text; ``load_kmv`` gives back an equal model."""
    lines: list[str] = []
    names = model.state_names
    unused = [name for name in model.propositions if not model.label(name).any()]
    if unused:
        lines.append(f"prop {' '.join(unused)}")
    for state, name in enumerate(names):
        lines.append(" ".join(["state", name, *model.labels_of(state)]))
    lines.extend(f"init {names[state]}" for state in model.initial_states)
    lines.extend(f"edge {names[source]} {names[target]}" for source, target in model.edges())
    return "\n".join(lines) + "\n"
