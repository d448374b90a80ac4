from .exceptions import FormulaSyntaxError
from .exceptions import SourceSpan
from .formula import Formula
from .normal_form import to_existential_normal_form
from .parser import parse_formula
from .printer import print_formula

__all__ = [
    "Formula",
    "FormulaSyntaxError",
    "SourceSpan",
    "parse_formula",
    "print_formula",
    "to_existential_normal_form",
]
