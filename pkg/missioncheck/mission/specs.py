"""Property catalogue in the mission vocabulary.

Catalogue files hold one property per line, ``id: formula # expected``, where
the id and the trailing verdict (``true`` or ``false``) are optional and other
``#`` text is a comment.
"""

import re
from dataclasses import dataclass

from missioncheck.ctl.exceptions import FormulaSyntaxError
from missioncheck.ctl.exceptions import SourceSpan
from missioncheck.ctl.formula import Formula
from missioncheck.ctl.parser import parse_formula
from missioncheck.ctl.printer import print_formula

from .constants import NUM_NEIGHBOURS

SPEC_LINE = re.compile(r"^(?:(?P<id>[A-Za-z_][A-Za-z0-9_]*)\s*:)?\s*(?P<formula>[^#]*?)\s*(?:#\s*(?P<comment>.*))?$")
VERDICT_WORDS = {"true": True, "false": False}


@dataclass(frozen=True)
class SpecEntry:
    id: str
    formula: Formula
    expected: bool | None = None
    description: str = ""

    @property
    def text(self) -> str:
        return print_formula(self.formula)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "formula": self.text,
            "expected": self.expected,
            "description": self.description,
        }


def _entry(spec_id: str, text: str, expected: bool, description: str) -> SpecEntry:  # noqa: FBT001
    return SpecEntry(spec_id, parse_formula(text), expected, description)


def builtin_specs() -> list[SpecEntry]:
    """The five mission properties, S3 unrolled over the five neighbours."""
    entries = [
        _entry(
            "S1",
            "AG (heading_90 & !threat_in_cell1 & !other_uav_selected_cell1 & !north_cell -> choice_cell1)",
            True,
            "flying north, the UAV goes straight on when the cell ahead is free",
        ),
        _entry(
            "S2",
            "AG (heading_270 & !threat_in_cell1 & !other_uav_selected_cell1 & !south_cell -> choice_cell1)",
            True,
            "flying south, the UAV goes straight on when the cell ahead is free",
        ),
    ]
    entries.extend(
        _entry(
            f"S3_{k}",
            f"AG (threat_in_cell{k} | other_uav_selected_cell{k} -> !choice_cell{k})",
            True,
            f"the UAV never enters neighbour {k} while it holds a threat or another UAV's claim",
        )
        for k in range(1, NUM_NEIGHBOURS + 1)
    )
    entries += [
        _entry("S4", "AG (heading_90 | heading_270)", True, "the heading is always 90 or 270 degrees"),
        _entry("S5", "AG (!choice_no_free_cell)", False, "the UAV never finds all neighbours blocked"),
    ]
    return entries


def extended_specs() -> list[SpecEntry]:
    """Reachability and liveness properties of the deadlock behaviour."""
    return [
        _entry("X1", "EF choice_no_free_cell", True, "a deadlock decision is reachable"),
        _entry("X2", "AG (at_sink -> AX at_sink)", True, "a deadlocked UAV stays deadlocked"),
        _entry("X3", "EF (north_cell & heading_90)", True, "the north boundary is reachable flying north"),
        _entry("X4", "AG (EF at_sink)", True, "deadlock can never be ruled out"),
        _entry("X5", "AF at_sink", False, "deadlock is not inevitable"),
        _entry("X6", "AG (!at_sink -> EX !at_sink)", False, "a UAV that has not halted cannot always continue"),
    ]


def catalogue() -> dict[str, SpecEntry]:
    return {entry.id: entry for entry in (*builtin_specs(), *extended_specs())}


def select_specs(spec_ids: list[str]) -> list[SpecEntry]:
    """Look up ids; ``S3`` stands for ``S3_1`` .. ``S3_5``."""
    known = catalogue()
    selected: list[SpecEntry] = []
    for spec_id in spec_ids:
        if spec_id in known:
            selected.append(known[spec_id])
            continue
        group = [entry for key, entry in known.items() if key.startswith(f"{spec_id}_")]
        if not group:
            msg = f"Unknown spec id {spec_id!r} (known: {', '.join(known)})"
            raise KeyError(msg)
        selected.extend(group)
    return selected


def parse_catalogue(text: str, *, id_prefix: str = "F") -> list[SpecEntry]:
    """Parse a catalogue file.

    Raises:
        FormulaSyntaxError: for the first malformed formula, with its message
            prefixed by the line number.
    """
    entries: list[SpecEntry] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = SPEC_LINE.match(line)
        if match is None or not match["formula"]:
            msg = f"line {lineno}: expected 'id: formula # expected'"
            raise FormulaSyntaxError(msg, SourceSpan(0, len(raw)))
        comment = (match["comment"] or "").strip().lower()
        try:
            formula = parse_formula(match["formula"])
        except FormulaSyntaxError as exc:
            msg = f"line {lineno}: {exc.message}"
            raise FormulaSyntaxError(msg, exc.span, exc.expected) from exc
        entries.append(
            SpecEntry(
                id=match["id"] or f"{id_prefix}{len(entries) + 1}",
                formula=formula,
                expected=VERDICT_WORDS.get(comment),
            ),
        )
    return entries


def format_catalogue(entries: list[SpecEntry]) -> str:
    lines = []
    for entry in entries:
        suffix = "" if entry.expected is None else f"  # {str(entry.expected).lower()}"
        lines.append(f"{entry.id}: {entry.text}{suffix}")
    return "\n".join(lines) + "\n"
