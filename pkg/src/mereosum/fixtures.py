"""Hand-built structures that separate the sum axioms.

Each fixture is a finite sum structure together with the axiom profile it
is expected to have. The five named after the axioms they break are the
standard independence witnesses for S1-S5; ``s3-fail-alt`` is a three
element structure found by exhaustive search that breaks S3 alone.

The ``s3-fail`` structure is induced from a seven element parthood
relation that is reflexive but not transitive. Its edges are read
bottom-up, and ``x ⊑ y`` holds when a path of lines of one style leads
from ``x`` to ``y``. The drawing has no loops; reflexivity is added
because the sum definition needs every object to overlap itself for
``5 + {6,7}`` to hold. ``nontransitive_parthood(reflexive=False)`` gives the
loop-free variant for inspection.

That relation makes 1 a sum of ``{3,5}`` as well as 3 (the part 6 of 1
overlaps 5 only through the dotted edge), so S2 fails on it alongside
S3. The recorded profile keeps the claimed one (S3 alone fails), so
:func:`check_profile` reports the disagreement instead of hiding it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import MereoStructure, SumStructure, part_structure, sum_structure
from .parthood import induced_sum_relation
from .sums import check_sum_axioms

NT_LABELS = ("1", "2", "3", "4", "5", "6", "7")
NT_SOLID = (("4", "2"), ("6", "2"), ("2", "1"), ("3", "1"), ("5", "3"), ("4", "3"), ("7", "5"))
NT_DOTTED = (("6", "5"),)
NT_CLOSURE = (("4", "1"), ("6", "1"), ("5", "1"), ("7", "1"), ("7", "3"))

PROFILE_AXIOMS = ("S1", "S2", "S3", "S4", "S5")


def _profile(failing: str, **extra: bool) -> dict[str, bool]:
    prof = {a: a != failing for a in PROFILE_AXIOMS}
    prof.update(extra)
    return prof


@dataclass(frozen=True)
class WitnessFixture:
    name: str
    caption: str
    structure: SumStructure
    expected: dict[str, bool]


def _closure_paths(edges: tuple[tuple[str, str], ...]) -> set[tuple[str, str]]:
    reach = set(edges)
    changed = True
    while changed:
        changed = False
        for a, b in list(reach):
            for c, d in list(reach):
                if b == c and (a, d) not in reach:
                    reach.add((a, d))
                    changed = True
    return reach


def nontransitive_parthood(reflexive: bool = True) -> MereoStructure:
    pairs = _closure_paths(NT_SOLID) | _closure_paths(NT_DOTTED)
    # Same-style reachability must match the listed closure exactly.
    assert pairs == set(NT_SOLID) | set(NT_DOTTED) | set(NT_CLOSURE)
    if reflexive:
        pairs |= {(c, c) for c in NT_LABELS}
    return part_structure(NT_LABELS, sorted(pairs))


def _nontransitive_sum(reflexive: bool = True) -> SumStructure:
    m = nontransitive_parthood(reflexive)
    return SumStructure(m.domain, induced_sum_relation(m))


def _build() -> dict[str, WitnessFixture]:
    fixtures = [
        WitnessFixture(
            "s1-fail",
            "two atoms without a sum of the pair",
            sum_structure("ab", [("a", "a"), ("b", "b")]),
            _profile("S1"),
        ),
        WitnessFixture(
            "s2-fail",
            "a + {a,b} and b + {a,b} with a != b",
            sum_structure("ab", [("a", "a"), ("a", "ab"), ("b", "b"), ("b", "ab")]),
            _profile("S2"),
        ),
        WitnessFixture(
            "s3-fail",
            "sums induced by a seven element non-transitive parthood",
            _nontransitive_sum(),
            _profile("S3"),
        ),
        WitnessFixture(
            "s4-fail",
            "a + {a} and a + {}",
            sum_structure("a", [("a", "a"), ("a", "")]),
            _profile("S4"),
        ),
        WitnessFixture(
            "s5-fail",
            "a + {a}, a + {a,b}, b + {b}: everything but S5",
            sum_structure("ab", [("a", "a"), ("a", "ab"), ("b", "b")]),
            _profile("S5", **{"SΣ": True, "WSP": True}),
        ),
        WitnessFixture(
            "s3-fail-alt",
            "three elements, S3 fails and nothing else",
            sum_structure(
                "abc",
                [("a", "a"), ("a", "b"), ("a", "ab"), ("b", "ac"), ("b", "bc"),
                 ("b", "abc"), ("c", "c")],
            ),
            _profile("S3"),
        ),
    ]
    return {f.name: f for f in fixtures}


_FIXTURES = _build()

FIXTURE_NAMES = tuple(_FIXTURES)
INDEPENDENCE_FIXTURES = ("s1-fail", "s2-fail", "s3-fail", "s4-fail", "s5-fail")


def witness(name: str) -> WitnessFixture:
    try:
        return _FIXTURES[name]
    except KeyError:
        raise KeyError(
            f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}"
        ) from None


def check_profile(fixture: WitnessFixture) -> tuple[bool, dict[str, bool]]:
    """Return ``(matches, observed)`` for the fixture's expected profile."""
    report = check_sum_axioms(fixture.structure, fixture.expected)
    observed = report.profile()
    return observed == fixture.expected, observed
