import pytest

from missioncheck.ctl.exceptions import FormulaSyntaxError
from missioncheck.ctl.formula import AF
from missioncheck.ctl.formula import AG
from missioncheck.ctl.formula import AU
from missioncheck.ctl.formula import AX
from missioncheck.ctl.formula import EF
from missioncheck.ctl.formula import EG
from missioncheck.ctl.formula import EU
from missioncheck.ctl.formula import EX
from missioncheck.ctl.formula import And
from missioncheck.ctl.formula import Atom
from missioncheck.ctl.formula import Bottom
from missioncheck.ctl.formula import Implies
from missioncheck.ctl.formula import Not
from missioncheck.ctl.formula import Or
from missioncheck.ctl.formula import Top
from missioncheck.ctl.parser import parse_formula

p, q, r = Atom("p"), Atom("q"), Atom("r")


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("p", p),
        ("true", Top()),
        ("false", Bottom()),
        ("!p", Not(p)),
        ("p & q | r", Or(And(p, q), r)),
        ("p | q & r", Or(p, And(q, r))),
        ("p -> q -> r", Implies(p, Implies(q, r))),
        ("p & q -> r", Implies(And(p, q), r)),
        ("AG p -> q", Implies(AG(p), q)),
        ("AG (p -> q)", AG(Implies(p, q))),
        ("!AX EX p", Not(AX(EX(p)))),
        ("AF EF EG p", AF(EF(EG(p)))),
        ("A [ p U q ]", AU(p, q)),
        ("E[p U q & r]", EU(p, And(q, r))),
        ("AG (heading_90 | heading_270)", AG(Or(Atom("heading_90"), Atom("heading_270")))),
        ("AXp", Atom("AXp")),
        ("  ( ( p ) )  ", p),
    ],
)
def test_parse(text, expected):
    assert parse_formula(text) == expected


def test_binary_operators_are_left_associative():
    assert parse_formula("p & q & r") == And(And(p, q), r)
    assert parse_formula("p | q | r") == Or(Or(p, q), r)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "   ",
        "p &",
        "& p",
        "p q",
        "(p",
        "((p)",
        "p)",
        "AG",
        "AG (p",
        "A [ p U q",
        "A [ p q ]",
        "E [ p U ]",
        "A p U q",
        "p -> ",
        "p $ q",
        "p @",
        "!",
        "EX EX",
        "U",
        "A",
        "p ]",
        "true false",
        "p ||| q",
        "[p]",
    ],
)
def test_malformed_input_has_a_span(text):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula(text)
    span = info.value.span
    assert 0 <= span.start <= span.end <= len(text)


def test_unknown_character():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("p $ q")
    assert info.value.message == "unknown character '$'"
    assert (info.value.span.start, info.value.span.end) == (2, 3)


def test_missing_closing_bracket():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("AG (p & q")
    assert info.value.message == "unbalanced bracket, missing ')'"
    assert info.value.span.start == len("AG (p & q")


def test_stray_closing_bracket():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("p & q)")
    assert info.value.message == "unbalanced bracket ')'"
    assert (info.value.span.start, info.value.span.end) == (5, 6)


def test_expected_tokens_are_reported():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("p &")
    assert "identifier" in info.value.expected
    assert "at 3" in str(info.value)


@pytest.mark.parametrize(("text", "start"), [("U", 0), ("AG U", 3), ("p & (U)", 5)])
def test_reserved_word_is_not_an_atom(text, start):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula(text)
    assert info.value.message == "reserved word 'U' cannot be used as an atom"
    assert (info.value.span.start, info.value.span.end) == (start, start + 1)


@pytest.mark.parametrize("text", ["p & A", "E", "p -> EX"])
def test_quantifier_without_operand_has_a_span(text):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula(text)
    assert info.value.span.end <= len(text)
