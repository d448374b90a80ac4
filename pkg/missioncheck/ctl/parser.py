"""Concrete CTL syntax.

Precedence, tightest first: the prefix operators (``!``, ``AX``, ``EX``, ``AF``,
``EF``, ``AG``, ``EG``), then ``&`` and ``|`` (both left associative), then
``->`` (right associative). ``A [ f U g ]`` and ``E [ f U g ]`` bracket themselves.
"""

from lark import Lark
from lark import Token
from lark import Transformer
from lark import v_args
from lark.exceptions import UnexpectedCharacters
from lark.exceptions import UnexpectedEOF
from lark.exceptions import UnexpectedToken

from .exceptions import FormulaSyntaxError
from .exceptions import SourceSpan
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
from .formula import RESERVED_WORDS
from .formula import Top

GRAMMAR = r"""
?start: implication

?implication: disjunction
    | disjunction "->" implication      -> implies

?disjunction: conjunction
    | disjunction "|" conjunction       -> or_

?conjunction: unary
    | conjunction "&" unary             -> and_

?unary: primary
    | "!" unary                         -> not_
    | "AX" unary                        -> ax
    | "EX" unary                        -> ex
    | "AF" unary                        -> af
    | "EF" unary                        -> ef
    | "AG" unary                        -> ag
    | "EG" unary                        -> eg

?primary: "true"                        -> top
    | "false"                           -> bottom
    | NAME                              -> atom
    | "(" implication ")"
    | "A" "[" implication "U" implication "]"   -> au
    | "E" "[" implication "U" implication "]"   -> eu

NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.WS
%ignore WS
"""

CLOSING_BRACKETS = {"RPAR": ")", "RSQB": "]"}
OPENING_BRACKETS = {")": "(", "]": "["}


@v_args(inline=True)
class _AstBuilder(Transformer):
    def implies(self, left, right):
        return Implies(left, right)

    def or_(self, left, right):
        return Or(left, right)

    def and_(self, left, right):
        return And(left, right)

    def not_(self, arg):
        return Not(arg)

    def ax(self, arg):
        return AX(arg)

    def ex(self, arg):
        return EX(arg)

    def af(self, arg):
        return AF(arg)

    def ef(self, arg):
        return EF(arg)

    def ag(self, arg):
        return AG(arg)

    def eg(self, arg):
        return EG(arg)

    def top(self):
        return Top()

    def bottom(self):
        return Bottom()

    def atom(self, token: Token):
        if str(token) in RESERVED_WORDS:
            span = SourceSpan(token.start_pos, token.end_pos)
            msg = f"reserved word {str(token)!r} cannot be used as an atom"
            raise FormulaSyntaxError(msg, span, frozenset({"identifier"}))
        return Atom(str(token))

    def au(self, left, right):
        return AU(left, right)

    def eu(self, left, right):
        return EU(left, right)


_PARSER = Lark(GRAMMAR, parser="lalr", transformer=_AstBuilder())


def _describe_terminal(name: str) -> str:
    if name == "$END":
        return "end of input"
    if name == "NAME":
        return "identifier"
    try:
        pattern = _PARSER.get_terminal(name).pattern
    except KeyError:
        return name
    return f"'{pattern.value}'"


def _open_brackets(prefix: str, closing: str) -> int:
    return prefix.count(OPENING_BRACKETS[closing]) - prefix.count(closing)


def parse_formula(text: str) -> Formula:
    """Parse ``text`` into a :class:`Formula`.

    Raises:
        FormulaSyntaxError: with the offending span and the set of tokens the
            grammar would have accepted there.
    """
    try:
        return _PARSER.parse(text)
    except UnexpectedCharacters as exc:
        span = SourceSpan(exc.pos_in_stream, exc.pos_in_stream + 1)
        expected = frozenset(_describe_terminal(name) for name in exc.allowed or ())
        msg = f"unknown character {text[exc.pos_in_stream]!r}"
        raise FormulaSyntaxError(msg, span, expected) from None
    except UnexpectedToken as exc:
        token = exc.token
        expected = frozenset(_describe_terminal(name) for name in exc.expected)
        if token.type == "$END":
            span = SourceSpan(len(text), len(text))
            missing = [CLOSING_BRACKETS[name] for name in sorted(exc.expected) if name in CLOSING_BRACKETS]
            msg = f"unbalanced bracket, missing {missing[0]!r}" if missing else "unexpected end of input"
        else:
            span = SourceSpan(token.start_pos, token.end_pos)
            if token.type in CLOSING_BRACKETS and _open_brackets(text[: token.start_pos], token.value) == 0:
                msg = f"unbalanced bracket {token.value!r}"
            else:
                msg = f"syntax error near {token.value!r}"
        raise FormulaSyntaxError(msg, span, expected) from None
    except UnexpectedEOF as exc:
        span = SourceSpan(len(text), len(text))
        expected = frozenset(_describe_terminal(name) for name in exc.expected)
        msg = "unexpected end of input"
        raise FormulaSyntaxError(msg, span, expected) from None
