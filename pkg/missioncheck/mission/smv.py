"""SMV rendering of the mission model, and a reader for the same dialect.

The dialect follows the usual ``MODULE main`` layout (``VAR``, ``ASSIGN``,
``DEFINE``, ``SPEC``) and additionally allows two-element array literals
``[x , y]`` for the cell position. Variables without a ``next`` assignment are
free inputs, re-chosen at every step.
"""

import itertools
import logging
import re
from collections.abc import Callable
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field
from typing import Any

import numpy as np
from lark import Lark
from lark import Transformer
from lark import v_args
from lark.exceptions import UnexpectedInput
from lark.exceptions import VisitError

from missioncheck.ctl.exceptions import FormulaSyntaxError
from missioncheck.ctl.formula import Formula
from missioncheck.ctl.parser import parse_formula
from missioncheck.ctl.printer import print_formula
from missioncheck.kripke.implicit import ImplicitKripke

from .constants import NUM_NEIGHBOURS
from .constants import OTHER_UAV_PROPS
from .constants import PROPOSITIONS
from .constants import THREAT_PROPS
from .decision import NEIGHBOURS
from .decision import PREFERENCE_ORDER
from .decision import CellChoice
from .decision import Heading
from .decision import neighbour_offsets
from .exceptions import SmvSyntaxError
from .grid import GridConfig
from .model import MissionEncoding
from .model import MissionKripke
from .model import mission_metadata
from .specs import SpecEntry
from .specs import builtin_specs

logger = logging.getLogger(__name__)

# -- emission ---------------------------------------------------------------------

EDGE_NAMES = {(0, 1): "north_edge", (0, -1): "south_edge", (1, 0): "east_edge", (-1, 0): "west_edge"}


def _num(value: float) -> str:
    return f"{value:g}"


def _inside_condition(dx: int, dy: int) -> str:
    edges = []
    if dy:
        edges.append(EDGE_NAMES[(0, dy)])
    if dx:
        edges.append(EDGE_NAMES[(dx, 0)])
    return " & ".join(f"!{edge}" for edge in edges)


def _shift(axis: int, delta: int, cell_size: float) -> str:
    if delta == 0:
        return f"current_cell[{axis}]"
    sign = "+" if delta > 0 else "-"
    return f"current_cell[{axis}]{sign}{_num(cell_size)}"


def _case(name: str, arms: Sequence[tuple[str, str]]) -> list[str]:
    lines = [f"  {name} := case"]
    lines.extend(f"      {condition} : {value};" for condition, value in arms)
    lines.append("    esac;")
    return lines


def emit_smv(
    grid: GridConfig,
    initial_cell: tuple[float, float] | None = None,
    initial_heading: Heading = Heading.DEG90,
    specs: Sequence[SpecEntry] | None = None,
) -> str:
    """SMV module of the single-UAV decision behaviour plus one SPEC per property."""
    initial_cell = initial_cell if initial_cell is not None else grid.origin
    grid.index_of(*initial_cell)
    specs = builtin_specs() if specs is None else specs
    low, high = _num(grid.min_centre), _num(grid.max_centre)
    centres = ", ".join(_num(grid.centre(k, 0)[0]) for k in range(grid.cells))

    lines = [
        f"-- single-UAV search behaviour on a {grid.cells} x {grid.cells} grid of {_num(grid.cell_size)} m cells",
        "MODULE main",
        "VAR",
        f"  current_cell : array 1..2 of {{{centres}}};",
        "  initial_heading : {90, 270};",
        "  halted : boolean;",
    ]
    lines.extend(f"  {name} : boolean;" for name in (*THREAT_PROPS, *OTHER_UAV_PROPS))
    lines += [
        "ASSIGN",
        f"  init(current_cell) := [{_num(initial_cell[0])} , {_num(initial_cell[1])}];",
        f"  init(initial_heading) := {initial_heading.value};",
        "  init(halted) := FALSE;",
        "  next(current_cell) := destination_cell;",
        "  next(initial_heading) := destination_heading;",
        "  next(halted) := halted | cell = no_free_cell;",
        "DEFINE",
        f"  north_edge := current_cell[2]={high};",
        f"  south_edge := current_cell[2]={low};",
        f"  east_edge := current_cell[1]={high};",
        f"  west_edge := current_cell[1]={low};",
    ]
    lines += _case(
        "north_cell",
        [("halted", "TRUE"), (f"current_cell[2]={high}", "TRUE"), ("TRUE", "FALSE")],
    )
    lines += _case(
        "south_cell",
        [("halted", "TRUE"), (f"current_cell[2]={low}", "TRUE"), ("TRUE", "FALSE")],
    )
    north, south = neighbour_offsets(Heading.DEG90), neighbour_offsets(Heading.DEG270)
    for k in range(1, NUM_NEIGHBOURS + 1):
        choice = CellChoice(k)
        lines.append(f"  blocked{k} := threat_in_cell{k} | other_uav_selected_cell{k};")
        lines += _case(
            f"inside{k}",
            [("initial_heading = 90", _inside_condition(*north[choice])), ("TRUE", _inside_condition(*south[choice]))],
        )
    lines += _case(
        "cell",
        [
            ("halted", "no_free_cell"),
            ("south_cell & initial_heading = 270 & inside4 & !blocked4", CellChoice.CELL4.smv_name),
            *((f"inside{c.value} & !blocked{c.value}", c.smv_name) for c in PREFERENCE_ORDER),
            ("TRUE", "no_free_cell"),
        ],
    )
    destination_arms = [("halted", "current_cell")]
    for heading, offsets in ((Heading.DEG90, north), (Heading.DEG270, south)):
        for choice in NEIGHBOURS:
            dx, dy = offsets[choice]
            target = f"[{_shift(1, dx, grid.cell_size)} , {_shift(2, dy, grid.cell_size)}]"
            destination_arms.append((f"initial_heading = {heading.value} & cell = {choice.smv_name}", target))
    destination_arms.append(("TRUE", "current_cell"))
    lines += _case("destination_cell", destination_arms)
    lines += _case("reversed_heading", [("initial_heading = 90", "270"), ("TRUE", "90")])
    lines += _case(
        "destination_heading",
        [
            ("halted", "initial_heading"),
            ("cell = cell4 | cell = cell5", "reversed_heading"),
            ("TRUE", "initial_heading"),
        ],
    )
    lines += [
        "  heading_90 := halted | initial_heading = 90;",
        "  heading_270 := halted | initial_heading = 270;",
    ]
    lines.extend(f"  {c.label} := !halted & cell = {c.smv_name};" for c in (*NEIGHBOURS, CellChoice.NO_FREE_CELL))
    lines.append("  at_sink := halted;")
    lines.append("")
    lines.extend(f"SPEC {print_formula(entry.formula)}  -- {entry.id}" for entry in specs)
    return "\n".join(lines) + "\n"


# -- reading ----------------------------------------------------------------------

SMV_GRAMMAR = r"""
start: "MODULE" NAME section*

?section: "VAR" var_decl+            -> var_section
    | "ASSIGN" assignment+           -> assign_section
    | "DEFINE" definition+           -> define_section

var_decl: NAME ":" type ";"

?type: "boolean"                                -> boolean_type
    | "{" enum_value ("," enum_value)* "}"      -> enum_type
    | "array" NUMBER ".." NUMBER "of" type      -> array_type

?enum_value: NUMBER                             -> enum_number
    | NAME                                      -> enum_symbol

assignment: "init" "(" NAME ")" ":=" expr ";"   -> init_assign
    | "next" "(" NAME ")" ":=" expr ";"         -> next_assign

definition: NAME ":=" expr ";"

?expr: disjunction
?disjunction: conjunction
    | disjunction "|" conjunction               -> or_
?conjunction: comparison
    | conjunction "&" comparison                -> and_
?comparison: sum
    | sum "=" sum                               -> eq
    | sum "!=" sum                              -> ne
?sum: unary
    | sum "+" unary                             -> add
    | sum "-" unary                             -> sub
?unary: primary
    | "!" unary                                 -> not_
?primary: NUMBER                                -> number
    | "TRUE"                                    -> true
    | "FALSE"                                   -> false
    | NAME                                      -> name
    | NAME "[" NUMBER "]"                       -> index
    | "[" expr "," expr "]"                     -> pair
    | "(" expr ")"
    | "case" case_arm+ "esac"                   -> case

case_arm: expr ":" expr ";"

NAME: /[A-Za-z_][A-Za-z0-9_]*/
NUMBER: /\d+(\.\d+)?/
COMMENT: /--[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

SPEC_PREFIX = re.compile(r"^\s*SPEC\b")

Value = Any
Expression = Callable[["_Scope"], Value]


def _number(token) -> int | float:
    text = str(token)
    return float(text) if "." in text else int(text)


@dataclass(frozen=True)
class ArrayType:
    size: int
    element: tuple

    def values(self) -> list[tuple]:
        return list(itertools.product(self.element, repeat=self.size))


@dataclass
class SmvModule:
    name: str
    variables: dict[str, tuple | ArrayType] = field(default_factory=dict)
    init: dict[str, Expression] = field(default_factory=dict)
    next: dict[str, Expression] = field(default_factory=dict)
    defines: dict[str, Expression] = field(default_factory=dict)
    specs: list[tuple[str, Formula]] = field(default_factory=list)

    @property
    def state_variables(self) -> list[str]:
        return [name for name in self.variables if name in self.next]

    @property
    def input_variables(self) -> list[str]:
        return [name for name in self.variables if name not in self.next]

    def domain(self, name: str) -> list:
        kind = self.variables[name]
        return kind.values() if isinstance(kind, ArrayType) else list(kind)

    def evaluate(self, name: str, valuation: dict[str, Value]) -> Value:
        return _Scope(self, valuation).lookup(name)

    def initial_valuation(self) -> dict[str, Value]:
        missing = [name for name in self.state_variables if name not in self.init]
        if missing:
            msg = f"state variable(s) without init: {', '.join(missing)}"
            raise SmvSyntaxError(msg)
        scope = _Scope(self, {})
        return {name: self.init[name](scope) for name in self.state_variables}

    def to_implicit(
        self,
        core_index: Callable[[dict[str, Value]], int],
        num_cores: int,
        propositions: Sequence[str],
        **kwargs,
    ) -> ImplicitKripke:
        """Enumerate the module into an implicit model.

        ``core_index`` maps a valuation of the state variables to a core; several
        valuations may share a core, in which case the first one in domain order
        stands for all of them. Input variables must be boolean; the first
        declared one is bit 0 of the input code.
        """
        inputs = self.input_variables
        for name in inputs:
            if self.variables[name] != (False, True):
                msg = f"input variable {name} must be boolean"
                raise SmvSyntaxError(msg)
        state_names = self.state_variables
        representatives: dict[int, dict[str, Value]] = {}
        for values in itertools.product(*(self.domain(name) for name in state_names)):
            valuation = dict(zip(state_names, values, strict=True))
            representatives.setdefault(core_index(valuation), valuation)
        missing = sorted(set(range(num_cores)) - set(representatives))
        if missing:
            msg = f"no valuation of the state variables maps to core {missing[0]}"
            raise SmvSyntaxError(msg)

        num_inputs = 1 << len(inputs)
        input_valuations = [
            {name: bool(code >> bit & 1) for bit, name in enumerate(inputs)} for code in range(num_inputs)
        ]
        step = np.zeros((num_cores, num_inputs), dtype=np.int64)
        labels = {name: np.zeros((num_cores, num_inputs), dtype=bool) for name in propositions}
        for core in range(num_cores):
            for code, input_valuation in enumerate(input_valuations):
                scope = _Scope(self, {**representatives[core], **input_valuation})
                successor = {name: self.next[name](scope) for name in state_names}
                step[core, code] = core_index(successor)
                for name in propositions:
                    labels[name][core, code] = bool(scope.lookup(name))
        initial = np.zeros((num_cores, num_inputs), dtype=bool)
        initial[core_index(self.initial_valuation())] = True
        logger.info(f"Enumerated SMV module {self.name}: {num_cores} cores x {num_inputs} inputs")
        return ImplicitKripke(step, labels, initial, **kwargs)


class _Scope:
    __slots__ = ("cache", "module", "values")

    def __init__(self, module: SmvModule, values: dict[str, Value]):
        self.module = module
        self.values = values
        self.cache: dict[str, Value] = {}

    def lookup(self, name: str) -> Value:
        if name in self.values:
            return self.values[name]
        if name in self.cache:
            return self.cache[name]
        define = self.module.defines.get(name)
        if define is None:
            # undeclared identifiers are symbolic constants such as cell1
            return name
        value = define(self)
        self.cache[name] = value
        return value


def _evaluate_case(arms: tuple[tuple[Expression, Expression], ...], scope: _Scope) -> Value:
    for condition, value in arms:
        if condition(scope):
            return value(scope)
    msg = "case expression without a matching arm"
    raise SmvSyntaxError(msg)


@v_args(inline=True)
class _ModuleBuilder(Transformer):
    def start(self, name, *sections):
        module = SmvModule(str(name))
        for kind, items in sections:
            target = {"var": module.variables, "init": module.init, "next": module.next, "define": module.defines}
            for entry_kind, key, value in items:
                table = target[entry_kind if kind == "assign" else kind]
                if key in table:
                    msg = f"{key} is defined twice"
                    raise SmvSyntaxError(msg)
                table[key] = value
        return module

    def var_section(self, *decls):
        return "var", [("var", name, kind) for name, kind in decls]

    def assign_section(self, *assignments):
        return "assign", list(assignments)

    def define_section(self, *definitions):
        return "define", [("define", name, expr) for name, expr in definitions]

    def var_decl(self, name, kind):
        return str(name), kind

    def boolean_type(self):
        return (False, True)

    def enum_type(self, *values):
        return tuple(values)

    def array_type(self, low, high, element):
        return ArrayType(_number(high) - _number(low) + 1, element)

    def enum_number(self, token):
        return _number(token)

    def enum_symbol(self, token):
        return str(token)

    def init_assign(self, name, expr):
        return "init", str(name), expr

    def next_assign(self, name, expr):
        return "next", str(name), expr

    def definition(self, name, expr):
        return str(name), expr

    def or_(self, left, right):
        return lambda scope: bool(left(scope)) or bool(right(scope))

    def and_(self, left, right):
        return lambda scope: bool(left(scope)) and bool(right(scope))

    def eq(self, left, right):
        return lambda scope: left(scope) == right(scope)

    def ne(self, left, right):
        return lambda scope: left(scope) != right(scope)

    def add(self, left, right):
        return lambda scope: left(scope) + right(scope)

    def sub(self, left, right):
        return lambda scope: left(scope) - right(scope)

    def not_(self, operand):
        return lambda scope: not operand(scope)

    def number(self, token):
        value = _number(token)
        return lambda scope: value

    def true(self):
        return lambda scope: True

    def false(self):
        return lambda scope: False

    def name(self, token):
        name = str(token)
        return lambda scope: scope.lookup(name)

    def index(self, token, position):
        name, offset = str(token), int(_number(position)) - 1
        return lambda scope: scope.lookup(name)[offset]

    def pair(self, first, second):
        return lambda scope: (first(scope), second(scope))

    def case(self, *arms):
        arms = tuple(arms)
        return lambda scope: _evaluate_case(arms, scope)

    def case_arm(self, condition, value):
        return condition, value


_SMV_PARSER = Lark(SMV_GRAMMAR, parser="lalr", transformer=_ModuleBuilder())


def parse_smv(text: str) -> SmvModule:
    """Read a module written in the dialect produced by :func:`emit_smv`."""
    body: list[str] = []
    specs: list[tuple[str, Formula]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not SPEC_PREFIX.match(line):
            body.append(line)
            continue
        content, _, comment = SPEC_PREFIX.sub("", line).partition("--")
        try:
            formula = parse_formula(content.strip().rstrip(";"))
        except FormulaSyntaxError as exc:
            raise SmvSyntaxError(str(exc), lineno) from exc
        specs.append((comment.strip() or f"SPEC{len(specs) + 1}", formula))
        body.append("")
    try:
        module = _SMV_PARSER.parse("\n".join(body))
    except UnexpectedInput as exc:
        msg = f"unexpected input at column {exc.column}"
        raise SmvSyntaxError(msg, exc.line) from None
    except VisitError as exc:
        if isinstance(exc.orig_exc, SmvSyntaxError):
            raise exc.orig_exc from None
        raise
    module.specs = specs
    return module


def smv_to_mission_kripke(module: SmvModule, grid: GridConfig) -> MissionKripke:
    """Enumerate a mission SMV module with the numbering of ``build_mission_kripke``."""
    encoding = MissionEncoding(grid)

    def core_index(valuation: dict[str, Value]) -> int:
        if valuation["halted"]:
            return encoding.sink_core
        ix, iy = grid.index_of(*valuation["current_cell"])
        return encoding.core_of(ix, iy, Heading(valuation["initial_heading"]))

    initial = module.initial_valuation()
    initial_cell = (float(initial["current_cell"][0]), float(initial["current_cell"][1]))
    metadata = mission_metadata(grid, initial_cell, Heading(initial["initial_heading"]))
    implicit = module.to_implicit(core_index, encoding.num_cores, PROPOSITIONS, metadata=metadata)
    return MissionKripke(
        encoding,
        implicit.step_table,
        {name: implicit.label(name) for name in PROPOSITIONS},
        implicit.initial,
        core_names=[encoding.core_name(core) for core in range(encoding.num_cores)],
        input_namer=lambda code: f"env{code}",
        metadata=metadata,
    )
