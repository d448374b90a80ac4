"""Fully parenthesised rendering of formulas in the concrete syntax."""

from .formula import AU
from .formula import EU
from .formula import And
from .formula import Atom
from .formula import Bottom
from .formula import Formula
from .formula import Implies
from .formula import Not
from .formula import Or
from .formula import Top

BINARY_SYMBOLS = {And: "&", Or: "|", Implies: "->"}
UNTIL_QUANTIFIERS = {AU: "A", EU: "E"}


def print_formula(formula: Formula) -> str:
    """Render ``formula`` so that ``parse_formula`` gives it back unchanged."""
    match formula:
        case Top():
            return "true"
        case Bottom():
            return "false"
        case Atom(name=name):
            return name
        case Not(arg=arg):
            return f"!({print_formula(arg)})"
        case And() | Or() | Implies():
            symbol = BINARY_SYMBOLS[type(formula)]
            return f"({print_formula(formula.left)} {symbol} {print_formula(formula.right)})"
        case AU() | EU():
            quantifier = UNTIL_QUANTIFIERS[type(formula)]
            return f"{quantifier} [ {print_formula(formula.left)} U {print_formula(formula.right)} ]"
        case _:
            # the six prefix temporal operators share one shape
            return f"{type(formula).__name__} ({print_formula(formula.arg)})"
