"""Rewriting into the existential fragment {true, false, atoms, !, &, EX, EU, EG}."""

from functools import lru_cache

from .formula import AF
from .formula import AG
from .formula import AU
from .formula import AX
from .formula import EF
from .formula import EG
from .formula import EU
from .formula import EX
from .formula import And
from .formula import Atom
from .formula import Bottom
from .formula import Formula
from .formula import Implies
from .formula import Not
from .formula import Or
from .formula import Top

ENF_NODE_TYPES = (Bottom, Top, Atom, Not, And, EX, EU, EG)


def _or(left: Formula, right: Formula) -> Formula:
    return Not(And(Not(left), Not(right)))


@lru_cache(maxsize=4096)
def to_existential_normal_form(formula: Formula) -> Formula:
    """Return an equivalent formula built only from ``ENF_NODE_TYPES``.

    No double negations are cancelled, so the shape of the output follows the
    rewrite rules one to one.
    """
    enf = to_existential_normal_form
    match formula:
        case Bottom() | Top() | Atom():
            return formula
        case Not(arg=arg):
            return Not(enf(arg))
        case And(left=left, right=right):
            return And(enf(left), enf(right))
        case Or(left=left, right=right):
            return _or(enf(left), enf(right))
        case Implies(left=left, right=right):
            return Not(And(enf(left), Not(enf(right))))
        case EX(arg=arg):
            return EX(enf(arg))
        case AX(arg=arg):
            return Not(EX(Not(enf(arg))))
        case EF(arg=arg):
            return EU(Top(), enf(arg))
        case AG(arg=arg):
            return Not(EU(Top(), Not(enf(arg))))
        case EG(arg=arg):
            return EG(enf(arg))
        case AF(arg=arg):
            return Not(EG(Not(enf(arg))))
        case EU(left=left, right=right):
            return EU(enf(left), enf(right))
        case AU(left=left, right=right):
            f, g = enf(left), enf(right)
            not_g = Not(g)
            return Not(_or(EU(not_g, And(Not(f), not_g)), EG(not_g)))
    msg = f"Unsupported formula node: {type(formula).__name__}"
    raise TypeError(msg)


def is_existential_normal_form(formula: Formula) -> bool:
    return all(isinstance(node, ENF_NODE_TYPES) for node in formula.walk())
