"""Graphviz DOT export for both structure kinds.

Sum structures draw each element as a dot and each summed collection as
a brace-labelled node, with a dashed arrow from ``x`` to ``X`` whenever
``x + X``. Parthood structures draw the covering pairs as solid edges,
bottom-up; every other pair, loops included, is kept as an invisible
edge so the file still describes the whole relation.

Node ids encode the data: ``e<i>`` is element ``i`` and ``s<mask>`` is the
subset with that bitmask. :func:`parse_dot` reads this dialect back.
"""

from __future__ import annotations

import re

from .model import MereoStructure, PartRelation, SumRelation, SumStructure, make_domain
from .documents import ParseError, Structure


_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r"}
_UNESCAPES = {"n": "\n", "r": "\r"}


def _quote(text: str) -> str:
    return '"' + "".join(_ESCAPES.get(c, c) for c in text) + '"'


def _unquote(body: str) -> str:
    return re.sub(r"\\(.)", lambda m: _UNESCAPES.get(m.group(1), m.group(1)), body, flags=re.S)


def covering_pairs(part: PartRelation) -> list[tuple[int, int]]:
    n = part.size
    out = []
    for x, y in part.pairs():
        if x == y:
            continue
        between = any(
            z not in (x, y) and part.holds(x, z) and part.holds(z, y) for z in range(n)
        )
        if not between:
            out.append((x, y))
    return out


def _subset_label(s: SumStructure, X: int) -> str:
    if X == 0:
        return "∅"
    return "{" + ", ".join(s.domain.names(X)) + "}"


def export_dot(s: Structure) -> str:
    dom = s.domain
    if isinstance(s, SumStructure):
        lines = ["digraph sum {", "  rankdir=BT;"]
        for i, label in enumerate(dom.labels):
            lines.append(f"  e{i} [shape=point, width=0.08, xlabel={_quote(label)}];")
        subsets = sorted({X for _, X in s.sum.pairs()})
        for X in subsets:
            lines.append(f"  s{X} [shape=plaintext, label={_quote(_subset_label(s, X))}];")
        for x, X in s.sum.pairs():
            lines.append(f"  e{x} -> s{X} [style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    lines = ["digraph part {", "  rankdir=BT;"]
    for i, label in enumerate(dom.labels):
        lines.append(f"  e{i} [shape=circle, label={_quote(label)}];")
    covers = set(covering_pairs(s.part))
    for x, y in s.part.pairs():
        if (x, y) in covers:
            lines.append(f"  e{x} -> e{y};")
        else:
            lines.append(f"  e{x} -> e{y} [style=invis];")
    lines.append("}")
    return "\n".join(lines) + "\n"


_HEAD = re.compile(r"\s*digraph\s+(part|sum)\s*\{\s*$")
_NODE = re.compile(r"\s*(e\d+|s\d+)\s*\[(.*)\]\s*;\s*$")
_EDGE = re.compile(r"\s*(e\d+)\s*->\s*(e\d+|s\d+)\s*(\[(.*)\])?\s*;\s*$")
_GRAPH_ATTR = re.compile(r"\s*\w+\s*=\s*\w+\s*;\s*$")
_ATTR = re.compile(r'\s*(\w+)\s*=\s*("(?:[^"\\]|\\.)*"|[^,\s\]]+)\s*,?')


def _attrs(text: str, lineno: int, offset: int) -> dict[str, str]:
    out = {}
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _ATTR.match(text, pos)
        if not m:
            raise ParseError("malformed attribute list", lineno, offset + pos + 1)
        value = m.group(2)
        if value.startswith('"'):
            value = _unquote(value[1:-1])
        out[m.group(1)] = value
        pos = m.end()
    return out


def parse_dot(text: str) -> Structure:
    # Only "\n" ends a line; other line separators may sit inside labels.
    lines = [ln.removesuffix("\r") for ln in text.split("\n")]
    if lines and lines[-1] == "":
        lines.pop()
    kind = None
    labels: dict[int, str] = {}
    subsets: set[int] = set()
    edges: list[tuple[int, int, str, int]] = []
    closed = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw
        if not line.strip() or line.lstrip().startswith("//"):
            continue
        if kind is None:
            m = _HEAD.match(line)
            if not m:
                raise ParseError("expected 'digraph part {' or 'digraph sum {'", lineno, 1)
            kind = m.group(1)
            continue
        if closed:
            raise ParseError("text after closing brace", lineno, 1)
        if line.strip() == "}":
            closed = True
            continue
        if _GRAPH_ATTR.match(line):
            continue
        m = _EDGE.match(line)
        if m:
            src = int(m.group(1)[1:])
            dst = m.group(2)
            attrs = _attrs(m.group(4) or "", lineno, m.start(4) if m.group(4) else 0)
            edges.append((src, int(dst[1:]), dst[0], lineno))
            if kind == "sum" and attrs.get("style") != "dashed":
                raise ParseError("sum edges must be dashed", lineno, 1)
            continue
        m = _NODE.match(line)
        if m:
            ident = m.group(1)
            attrs = _attrs(m.group(2), lineno, m.start(2))
            if ident[0] == "e":
                key = "xlabel" if kind == "sum" else "label"
                if key not in attrs:
                    raise ParseError(f"element node needs a {key}", lineno, 1)
                labels[int(ident[1:])] = attrs[key]
            else:
                subsets.add(int(ident[1:]))
            continue
        raise ParseError("unrecognised statement", lineno, len(raw) - len(raw.lstrip()) + 1)
    if kind is None or not closed:
        raise ParseError("unterminated digraph", len(lines), 1)

    n = len(labels)
    if sorted(labels) != list(range(n)):
        raise ParseError("element nodes must be numbered e0..e{n-1} without gaps")
    domain = make_domain(labels[i] for i in range(n))
    for src, dst, tag, lineno in edges:
        if src >= n or (tag == "e" and dst >= n):
            raise ParseError("edge refers to an undeclared element", lineno, 1)
        if kind == "part" and tag != "e":
            raise ParseError("part edges join two elements", lineno, 1)
        if kind == "sum" and (tag != "s" or dst not in subsets):
            raise ParseError("sum edges go from an element to a declared subset", lineno, 1)
        if kind == "sum" and dst >> n:
            raise ParseError("subset mentions elements outside the domain", lineno, 1)
    if kind == "part":
        rel = PartRelation.from_pairs(n, ((a, b) for a, b, _, _ in edges))
        return MereoStructure(domain, rel)
    return SumStructure(domain, SumRelation.from_pairs(n, ((a, b) for a, b, _, _ in edges)))
