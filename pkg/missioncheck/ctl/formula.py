"""CTL abstract syntax.

Every node is an immutable, hashable dataclass, so structurally equal formulas
compare equal and can key memo tables in the checker.
"""

import re
from collections.abc import Iterator
from dataclasses import dataclass

ATOM_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

# Words the concrete syntax claims for itself; they cannot name atoms.
RESERVED_WORDS = frozenset({"true", "false", "A", "E", "U", "AX", "EX", "AF", "EF", "AG", "EG"})


class Formula:
    """Base class of all CTL nodes."""

    __slots__ = ()

    def children(self) -> tuple["Formula", ...]:
        return ()

    def walk(self) -> Iterator["Formula"]:
        """Yield this node and every sub-formula, parents before children."""
        stack: list[Formula] = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children()))

    def atoms(self) -> frozenset[str]:
        return frozenset(node.name for node in self.walk() if isinstance(node, Atom))

    @property
    def is_propositional(self) -> bool:
        """True when no temporal operator occurs in the formula."""
        return not any(isinstance(node, TemporalOperator) for node in self.walk())

    def depth(self) -> int:
        children = self.children()
        if not children:
            return 0
        return 1 + max(child.depth() for child in children)


class TemporalOperator(Formula):
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Top(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not ATOM_PATTERN.fullmatch(self.name) or self.name in RESERVED_WORDS:
            msg = f"Invalid atom name: {self.name!r}"
            raise ValueError(msg)


@dataclass(frozen=True, slots=True)
class Not(Formula):
    arg: Formula

    def children(self) -> tuple[Formula, ...]:
        return (self.arg,)


@dataclass(frozen=True, slots=True)
class _Binary(Formula):
    left: Formula
    right: Formula

    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class And(_Binary):
    pass


@dataclass(frozen=True, slots=True)
class Or(_Binary):
    pass


@dataclass(frozen=True, slots=True)
class Implies(_Binary):
    pass


@dataclass(frozen=True, slots=True)
class _UnaryTemporal(TemporalOperator):
    arg: Formula

    def children(self) -> tuple[Formula, ...]:
        return (self.arg,)


@dataclass(frozen=True, slots=True)
class AX(_UnaryTemporal):
    pass


@dataclass(frozen=True, slots=True)
class EX(_UnaryTemporal):
    pass


@dataclass(frozen=True, slots=True)
class AF(_UnaryTemporal):
    pass


@dataclass(frozen=True, slots=True)
class EF(_UnaryTemporal):
    pass


@dataclass(frozen=True, slots=True)
class AG(_UnaryTemporal):
    pass


@dataclass(frozen=True, slots=True)
class EG(_UnaryTemporal):
    pass


@dataclass(frozen=True, slots=True)
class _BinaryTemporal(TemporalOperator):
    left: Formula
    right: Formula

    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class AU(_BinaryTemporal):
    pass


@dataclass(frozen=True, slots=True)
class EU(_BinaryTemporal):
    pass


UNARY_TEMPORAL = (AX, EX, AF, EF, AG, EG)
EXISTENTIAL_CORE = (EX, EU, EG)
