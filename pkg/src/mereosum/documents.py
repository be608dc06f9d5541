"""Model documents: the on-disk text form of a structure.

A document is a JSON object::

    {
      "kind": "part" | "sum",
      "elements": [label, ...],
      "pairs": [...],
      "name": "...",        (optional)
      "note": "..."         (optional)
    }

For ``kind: "part"`` each pair is ``[x, y]`` meaning x is part of y. For
``kind: "sum"`` each pair is ``[x, [m1, m2, ...]]`` meaning x is the sum
of the listed members; ``[]`` is the empty collection.

:func:`parse_model` also accepts the DOT produced by
:func:`mereosum.dot.export_dot`, so exported diagrams load back unchanged.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .model import (
    Domain,
    MereoStructure,
    ModelError,
    PartRelation,
    SumRelation,
    SumStructure,
    make_domain,
)

Structure = Union[MereoStructure, SumStructure]

_KEYS = {"kind", "elements", "pairs", "name", "note"}


class ParseError(ModelError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class DuplicatePairError(ModelError):
    pass


class DuplicateMemberError(ModelError):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParseError(message)


def _label(domain: Domain, value: Any) -> int:
    _require(isinstance(value, str), f"expected a label string, got {value!r}")
    return domain.index(value)


def structure_from_dict(doc: Any) -> Structure:
    _require(isinstance(doc, dict), "a model document must be a JSON object")
    unknown = set(doc) - _KEYS
    _require(not unknown, f"unknown keys: {', '.join(sorted(unknown))}")
    kind = doc.get("kind")
    _require(kind in ("part", "sum"), f'"kind" must be "part" or "sum", got {kind!r}')
    elements = doc.get("elements")
    _require(isinstance(elements, list), '"elements" must be a list of labels')
    _require(all(isinstance(e, str) for e in elements), "element labels must be strings")
    domain = make_domain(elements)
    pairs = doc.get("pairs", [])
    _require(isinstance(pairs, list), '"pairs" must be a list')

    seen: set = set()
    if kind == "part":
        decoded = []
        for p in pairs:
            _require(isinstance(p, list) and len(p) == 2, f"part pair must be [x, y], got {p!r}")
            key = (_label(domain, p[0]), _label(domain, p[1]))
            if key in seen:
                raise DuplicatePairError(f"duplicate pair {p!r}")
            seen.add(key)
            decoded.append(key)
        return MereoStructure(domain, PartRelation.from_pairs(len(domain), decoded))

    decoded_sum = []
    for p in pairs:
        _require(
            isinstance(p, list) and len(p) == 2 and isinstance(p[1], list),
            f"sum pair must be [x, [members...]], got {p!r}",
        )
        x = _label(domain, p[0])
        mask = 0
        for name in p[1]:
            bit = 1 << _label(domain, name)
            if mask & bit:
                raise DuplicateMemberError(f"member {name!r} listed twice in {p!r}")
            mask |= bit
        if (x, mask) in seen:
            raise DuplicatePairError(f"duplicate pair {p!r}")
        seen.add((x, mask))
        decoded_sum.append((x, mask))
    return SumStructure(domain, SumRelation.from_pairs(len(domain), decoded_sum))


def structure_to_dict(s: Structure, name: str | None = None, note: str | None = None) -> dict:
    dom = s.domain
    if isinstance(s, MereoStructure):
        pairs: list = [[dom.labels[x], dom.labels[y]] for x, y in s.part.pairs()]
        kind = "part"
    else:
        pairs = [[dom.labels[x], dom.names(X)] for x, X in s.sum.pairs()]
        kind = "sum"
    doc: dict = {"kind": kind, "elements": list(dom.labels), "pairs": pairs}
    if name is not None:
        doc["name"] = name
    if note is not None:
        doc["note"] = note
    return doc


def dump_model(s: Structure, name: str | None = None, note: str | None = None) -> str:
    """Canonical document text: pairs in element order, one per line."""
    doc = structure_to_dict(s, name, note)
    lines = ["{"]
    lines.append(f'  "kind": {json.dumps(doc["kind"])},')
    lines.append(f'  "elements": {json.dumps(doc["elements"], ensure_ascii=False)},')
    for key in ("name", "note"):
        if key in doc:
            lines.append(f'  "{key}": {json.dumps(doc[key], ensure_ascii=False)},')
    if doc["pairs"]:
        lines.append('  "pairs": [')
        body = [f"    {json.dumps(p, ensure_ascii=False)}" for p in doc["pairs"]]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "pairs": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_model(text: str | bytes) -> Structure:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not UTF-8: {exc}") from None
    if text.lstrip().startswith("digraph"):
        from .dot import parse_dot

        return parse_dot(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return structure_from_dict(doc)


def load_model(path: str) -> Structure:
    with open(path, "rb") as fh:
        return parse_model(fh.read())
