"""JSON workspace and set-function table files.

A workspace is one JSON document::

    {"atoms": ["a", "b"],
     "measures": {"mu": {"a": "1", "b": "0"}},
     "signed": {"s": {"a": "2", "b": "-3"}}}

``measures`` and ``signed`` may also be lists of ``{"name": ..., "weights":
{...}}`` entries.  Every number is a string: ``"k"``, ``"p/q"`` or ``"inf"``
(a leading ``-`` only for signed weights).  Each weight map must name every
atom exactly once.

A table file maps set expressions to values, optionally under a ``"values"``
key: ``{"values": {"empty": "0", "a": "0", "b": "0", "a|b": "1"}}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .expressions import ParseError, SemanticError, eval_set
from .extended_reals import format_ext, parse_ext
from .measurable_space import MeasurableSet, MeasurableSpace, check_set_cap, enumerate_sets
from .measures import Measure, SetFunctionTable, SignedMeasure

__all__ = [
    "Workspace",
    "load_workspace",
    "parse_workspace",
    "dump_workspace",
    "load_table",
    "parse_table",
    "format_table",
]

_ATOM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_RESERVED_ATOMS = {"empty", "all"}


@dataclass
class Workspace:
    space: MeasurableSpace
    measures: dict[str, Measure] = field(default_factory=dict)
    signed: dict[str, SignedMeasure] = field(default_factory=dict)


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno, source) from None


def _semantic(message: str, source: str) -> SemanticError:
    # JSON values carry no positions once decoded; point at the document start.
    return SemanticError(message, 1, 1, source)


def _entries(raw, key: str, source: str) -> list[tuple[str, dict]]:
    if raw is None:
        return []
    if isinstance(raw, dict):
        items = list(raw.items())
    elif isinstance(raw, list):
        items = []
        for entry in raw:
            if not isinstance(entry, dict) or set(entry) != {"name", "weights"}:
                raise _semantic(f"each {key!r} entry needs exactly 'name' and 'weights'", source)
            items.append((entry["name"], entry["weights"]))
    else:
        raise _semantic(f"{key!r} must be an object or a list", source)
    names = [n for n, _ in items]
    for n in names:
        if not isinstance(n, str) or not n:
            raise _semantic(f"{key!r} names must be nonempty strings", source)
    if len(set(names)) != len(names):
        raise _semantic(f"duplicate names in {key!r}", source)
    return items


def _weights(space: MeasurableSpace, name: str, raw, signed: bool, source: str) -> list:
    if not isinstance(raw, dict):
        raise _semantic(f"weights of {name!r} must be an object keyed by atom", source)
    missing = [a for a in space.atom_names if a not in raw]
    if missing:
        raise _semantic(f"{name!r} has no weight for atom(s): {', '.join(missing)}", source)
    extra = sorted(set(raw) - set(space.atom_names))
    if extra:
        raise _semantic(f"{name!r} gives weights for undeclared atom(s): {', '.join(extra)}", source)
    out = []
    for atom in space.atom_names:
        text = raw[atom]
        if not isinstance(text, str):
            raise ParseError(
                f"weight of {name!r} at {atom!r} must be a string like \"1/2\" or \"inf\", got {text!r}",
                1, 1, source,
            )
        try:
            out.append(parse_ext(text, signed=signed))
        except ValueError as exc:
            raise ParseError(f"weight of {name!r} at {atom!r}: {exc}", 1, 1, source) from None
    return out


def parse_workspace(text: str, source: str = "") -> Workspace:
    doc = _load_json(text, source)
    if not isinstance(doc, dict):
        raise _semantic("workspace must be a JSON object", source)
    unknown = sorted(set(doc) - {"atoms", "measures", "signed"})
    if unknown:
        raise _semantic(f"unknown workspace keys: {', '.join(unknown)}", source)
    atoms = doc.get("atoms")
    if not isinstance(atoms, list):
        raise _semantic("workspace needs an 'atoms' list", source)
    for a in atoms:
        if not isinstance(a, str) or not _ATOM_RE.fullmatch(a) or a in _RESERVED_ATOMS:
            raise _semantic(f"invalid atom name {a!r}", source)
    try:
        space = MeasurableSpace(atoms)
    except ValueError as exc:
        raise _semantic(str(exc), source) from None

    ws = Workspace(space)
    for name, raw in _entries(doc.get("measures"), "measures", source):
        ws.measures[name] = Measure(space, _weights(space, name, raw, False, source))
    for name, raw in _entries(doc.get("signed"), "signed", source):
        if name in ws.measures:
            raise _semantic(f"{name!r} is declared as both a measure and a signed measure", source)
        ws.signed[name] = SignedMeasure(space, _weights(space, name, raw, True, source))
    return ws


def load_workspace(path: str | Path) -> Workspace:
    path = Path(path)
    return parse_workspace(path.read_text(encoding="utf-8"), str(path))


def dump_workspace(ws: Workspace) -> str:
    doc = {"atoms": list(ws.space.atom_names)}
    if ws.measures:
        doc["measures"] = {n: m.as_mapping() for n, m in ws.measures.items()}
    if ws.signed:
        doc["signed"] = {n: s.as_mapping() for n, s in ws.signed.items()}
    return json.dumps(doc, indent=2) + "\n"


def parse_table(text: str, space: MeasurableSpace, source: str = "") -> SetFunctionTable:
    """Read a table keyed by set expressions; every measurable set exactly once."""
    doc = _load_json(text, source)
    if isinstance(doc, dict) and set(doc) == {"values"}:
        doc = doc["values"]
    if not isinstance(doc, dict):
        raise _semantic("table must be an object mapping set expressions to values", source)
    check_set_cap(space.n, None)
    values = [None] * (1 << space.n)
    keys = [None] * (1 << space.n)
    for expr, text_value in doc.items():
        s = eval_set(expr, space, source=f"{source}[{expr!r}]" if source else "")
        if not isinstance(text_value, str):
            raise ParseError(f"value for {expr!r} must be a string, got {text_value!r}", 1, 1, source)
        try:
            v = parse_ext(text_value)
        except ValueError as exc:
            raise ParseError(f"value for {expr!r}: {exc}", 1, 1, source) from None
        if values[s.mask] is not None:
            raise _semantic(f"{expr!r} and {keys[s.mask]!r} denote the same set", source)
        values[s.mask] = v
        keys[s.mask] = expr
    missing = [i for i, v in enumerate(values) if v is None]
    if missing:
        names = ", ".join(MeasurableSet(space, m).to_expression() for m in missing[:5])
        more = f" and {len(missing) - 5} more" if len(missing) > 5 else ""
        raise _semantic(f"table has no value for set(s): {names}{more}", source)
    return SetFunctionTable(space, tuple(values))


def load_table(path: str | Path, space: MeasurableSpace) -> SetFunctionTable:
    path = Path(path)
    return parse_table(path.read_text(encoding="utf-8"), space, str(path))


def format_table(t: SetFunctionTable) -> str:
    return json.dumps(
        {"values": {s.to_expression(): format_ext(t[s]) for s in enumerate_sets(t.space)}}, indent=2
    ) + "\n"
