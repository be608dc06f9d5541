import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mereosum.documents import (
    DuplicateMemberError,
    DuplicatePairError,
    ParseError,
    dump_model,
    load_model,
    parse_model,
    structure_to_dict,
)
from mereosum.dot import covering_pairs, export_dot, parse_dot
from mereosum.enumeration import enumerate_mereo, enumerate_sum
from mereosum.fixtures import FIXTURE_NAMES, nontransitive_parthood, witness
from mereosum.model import (
    DuplicateLabelError,
    MereoStructure,
    PartRelation,
    SumRelation,
    SumStructure,
    UnknownLabelError,
    make_domain,
)


def all_structures():
    out = [witness(name).structure for name in FIXTURE_NAMES]
    out.append(nontransitive_parthood())
    out.append(nontransitive_parthood(reflexive=False))
    for n in (1, 3):
        out += enumerate_mereo(n).structures()
        out += enumerate_sum(n).structures()
    return out


@pytest.mark.parametrize("s", all_structures())
def test_document_roundtrip(s):
    assert parse_model(dump_model(s)) == s


@pytest.mark.parametrize("s", all_structures())
def test_dot_roundtrip(s):
    text = export_dot(s)
    assert parse_dot(text) == s
    assert parse_model(text) == s


def test_dump_is_canonical():
    s = witness("s5-fail").structure
    text = dump_model(s, name="s5-fail")
    assert text == dump_model(parse_model(text), name="s5-fail")
    assert json.loads(text)["pairs"] == [["a", ["a"]], ["a", ["a", "b"]], ["b", ["b"]]]


def test_s5_witness_dot_shape():
    text = export_dot(witness("s5-fail").structure)
    lines = text.splitlines()
    assert sum("shape=point" in ln for ln in lines) == 2
    assert sum("shape=plaintext" in ln for ln in lines) == 3
    assert sum("style=dashed" in ln for ln in lines) == 3
    assert 's3 [shape=plaintext, label="{a, b}"];' in text


def test_part_dot_marks_covers():
    m = nontransitive_parthood()
    text = export_dot(m)
    solid = [ln for ln in text.splitlines() if "->" in ln and "invis" not in ln]
    assert len(solid) == len(covering_pairs(m.part))
    d = m.domain
    # 7 is below 1 only through the closure, so that edge is not a cover
    assert (d.index("7"), d.index("1")) not in covering_pairs(m.part)


def test_empty_subset_label():
    s = witness("s4-fail").structure
    assert 's0 [shape=plaintext, label="∅"];' in export_dot(s)


@st.composite
def labelled_structures(draw):
    n = draw(st.integers(1, 3))
    labels = draw(
        st.lists(st.text(min_size=1, max_size=4), min_size=n, max_size=n, unique=True)
    )
    dom = make_domain(labels)
    if draw(st.booleans()):
        bits = draw(st.integers(0, (1 << n * n) - 1))
        pairs = [(x, y) for x in range(n) for y in range(n) if bits >> (x * n + y) & 1]
        return MereoStructure(dom, PartRelation.from_pairs(n, pairs))
    rows = [draw(st.integers(0, (1 << (1 << n)) - 1)) for _ in range(n)]
    pairs = [(x, X) for x in range(n) for X in range(1 << n) if rows[x] >> X & 1]
    return SumStructure(dom, SumRelation.from_pairs(n, pairs))


@settings(max_examples=300, deadline=None)
@given(labelled_structures())
def test_arbitrary_roundtrips(s):
    assert parse_model(dump_model(s)) == s
    assert parse_model(dump_model(s).encode("utf-8")) == s
    assert parse_dot(export_dot(s)) == s


def test_load_model(tmp_path):
    s = witness("s2-fail").structure
    path = tmp_path / "m.model"
    path.write_text(dump_model(s), encoding="utf-8")
    assert load_model(str(path)) == s


def test_json_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse_model('{\n  "kind": "part",\n  "elements": ["a"] "pairs": []\n}')
    assert (err.value.line, err.value.column) == (3, 21)


@pytest.mark.parametrize(
    "doc, exc",
    [
        ({"kind": "part", "elements": ["a"], "pairs": [["a", "z"]]}, UnknownLabelError),
        ({"kind": "part", "elements": ["a", "a"], "pairs": []}, DuplicateLabelError),
        ({"kind": "part", "elements": ["a"], "pairs": [["a", "a"], ["a", "a"]]},
         DuplicatePairError),
        ({"kind": "sum", "elements": ["a"], "pairs": [["a", ["a", "a"]]]}, DuplicateMemberError),
        ({"kind": "sum", "elements": ["a"], "pairs": [["a", ["a"]], ["a", ["a"]]]},
         DuplicatePairError),
        ({"kind": "lattice", "elements": ["a"], "pairs": []}, ParseError),
        ({"kind": "part", "elements": ["a"], "pairs": [], "extra": 1}, ParseError),
        ({"kind": "sum", "elements": ["a"], "pairs": [["a", "a"]]}, ParseError),
        ({"kind": "part", "elements": "ab", "pairs": []}, ParseError),
        ([1, 2], ParseError),
    ],
)
def test_document_errors(doc, exc):
    with pytest.raises(exc):
        parse_model(json.dumps(doc))


def test_non_utf8_bytes():
    with pytest.raises(ParseError):
        parse_model(b"\xff\xfe")


@pytest.mark.parametrize(
    "text, line",
    [
        ("graph x {\n}\n", 1),
        ("digraph sum {\n  e0 [shape=point, xlabel=\"a\"];\n  e0 -> s1;\n}\n", 3),
        ("digraph part {\n  e0 [label=\"a\"];\n  e0 -> e5;\n}\n", 3),
        ("digraph part {\n  e0 [label=\"a\"];\n  what is this\n}\n", 3),
        ("digraph part {\n  e0 [label=\"a\"];\n", 2),
        ("digraph part {\n  e0 [label=\"a\"];\n}\nextra;\n", 4),
    ],
)
def test_dot_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_dot(text)
    assert err.value.line == line


def test_dot_comments_and_gaps():
    text = "// hand written\ndigraph part {\n\n  e0 [label=\"a\"];\n  e0 -> e0;\n}\n"
    m = parse_dot(text)
    assert m.part.pairs() == [(0, 0)]
    with pytest.raises(ParseError):
        parse_dot("digraph part {\n  e1 [label=\"a\"];\n}\n")


def test_structure_to_dict_extras():
    d = structure_to_dict(witness("s1-fail").structure, name="n", note="t")
    assert d["name"] == "n" and d["note"] == "t" and d["kind"] == "sum"
