"""Sum structures: the axioms S1-S5 and everything derived from ``+``.

``x + X`` reads "x is the mereological sum of the collection X". The
s-part relation ``y ⊑₊ x`` holds when ``y`` belongs to some collection
summed by ``x``; s-overlap and s-disjointness compare the collections two
objects sum.

The public single-instance functions follow the definitions literally.
The axiom checkers run off per-relation tables built from those same
definitions, and every reported witness can be replayed with
:func:`replay_sum_witness`, which uses only the literal functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .model import (
    PartRelation,
    Subset,
    SumRelation,
    SumStructure,
    all_subsets,
    is_member,
    members,
)
from .parthood import disjoint_p, overlap_p, sum_induced_holds
from .report import AxiomReport, AxiomVerdict, fail, ok

SUM_AXIOMS = ("S1", "S2", "S3", "S4", "S4°", "S5", "SΣ", "WSP")
CORE_SUM_AXIOMS = ("S1", "S2", "S3", "S4", "S5")

DERIVED_THEOREMS = (
    "antisymmetry",
    "transitivity",
    "reflexivity",
    "own-parts-predense",
    "own-parts-sum",
    "WSP",
    "self-sum",
    "no-empty-sum",
    "aux-1",
    "aux-2",
    "aux-3",
    "aux-4",
    "S5-var",
    "partition",
    "ingr-union",
    "SΣ",
    "overlap-fact",
    "sum-agreement",
)

# ASCII spellings accepted wherever axiom names are parsed.
ALIASES = {"S4o": "S4°", "S4deg": "S4°", "SSigma": "SΣ", "SS": "SΣ"}


def _rel(s: SumStructure | SumRelation) -> SumRelation:
    return s.sum if isinstance(s, SumStructure) else s


@dataclass(frozen=True)
class SigmaFamily:
    owner: int
    family: tuple[Subset, ...]


# -- literal definitions ----------------------------------------------------


def part_induced(s: SumStructure | SumRelation, x: int, y: int) -> bool:
    """``x ⊑₊ y``: some collection summed by ``y`` contains ``x``."""
    return any(is_member(x, X) for X in _rel(s).families[y])


def induced_part_relation(s: SumStructure | SumRelation) -> PartRelation:
    r = _rel(s)
    n = r.size
    return PartRelation.from_pairs(
        n, ((x, y) for x in range(n) for y in range(n) if part_induced(r, x, y))
    )


def ingr_set(s: SumStructure | SumRelation, x: int) -> Subset:
    """The s-parts of ``x``."""
    r = _rel(s)
    return sum(1 << y for y in range(r.size) if part_induced(r, y, x))


def ingr_set_family(s: SumStructure | SumRelation, A: Subset) -> Subset:
    acc = 0
    for a in members(A):
        acc |= ingr_set(s, a)
    return acc


def s_overlap(s: SumStructure | SumRelation, x: int, y: int) -> bool:
    fams = _rel(s).families
    return any(X & Y for X in fams[x] for Y in fams[y])


def s_disjoint(s: SumStructure | SumRelation, x: int, y: int) -> bool:
    fams = _rel(s).families
    return all(X & Y == 0 for X in fams[x] for Y in fams[y])


def pre_dense(s: SumStructure | SumRelation, A: Subset, B: Subset) -> bool:
    """Every member of ``B`` s-overlaps some member of ``A``."""
    return all(any(s_overlap(s, a, b) for a in members(A)) for b in members(B))


def sigma(s: SumStructure | SumRelation, x: int) -> SigmaFamily:
    return SigmaFamily(x, _rel(s).families[x])


def sum_wrt_induced(s: SumStructure | SumRelation, x: int, X: Subset) -> bool:
    """``x`` sums ``X`` in the parthood sense, with ⊑₊ as parthood."""
    return sum_induced_holds(induced_part_relation(s), x, X)


# -- tables -----------------------------------------------------------------


@dataclass(frozen=True)
class _Tables:
    n: int
    fams: tuple[tuple[Subset, ...], ...]
    look: tuple[frozenset[Subset], ...]
    ingr: tuple[Subset, ...]
    sov: tuple[Subset, ...]

    def ingr_of(self, A: Subset) -> Subset:
        acc = 0
        for a in members(A):
            acc |= self.ingr[a]
        return acc

    def predense(self, A: Subset, B: Subset) -> bool:
        sov = self.sov
        return all(sov[b] & A for b in members(B))


@lru_cache(maxsize=512)
def _tables(r: SumRelation) -> _Tables:
    n = r.size
    fams = r.families
    ingr = []
    for x in range(n):
        acc = 0
        for X in fams[x]:
            acc |= X
        ingr.append(acc)
    sov = []
    for x in range(n):
        row = 0
        for y in range(n):
            if any(X & Y for X in fams[x] for Y in fams[y]):
                row |= 1 << y
        sov.append(row)
    return _Tables(n, fams, tuple(frozenset(f) for f in fams), tuple(ingr), tuple(sov))


# -- axioms -----------------------------------------------------------------


def _s1(t: _Tables, strict: bool) -> AxiomVerdict:
    for X in all_subsets(t.n, nonempty_only=True):
        candidates = members(X) if strict else range(t.n)
        if not any(X in t.look[x] for x in candidates):
            return fail("S1", X=X)
    return ok("S1")


def _s2(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        for y in range(t.n):
            if x == y:
                continue
            for X in t.fams[x]:
                if X in t.look[y]:
                    return fail("S2", x=x, y=y, X=X)
    return ok("S2")


def _s3(t: _Tables) -> AxiomVerdict:
    n = t.n
    for x in range(n):
        for X in t.fams[x]:
            for y in range(n):
                for Y in t.fams[y]:
                    if is_member(x, Y) and (X | Y) not in t.look[y]:
                        return fail("S3", x=x, X=X, y=y, Y=Y)
    return ok("S3")


def _s4(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        fam = t.fams[x]
        for X in fam:
            for Y in fam:
                for y in members(Y):
                    if not t.sov[y] & X:
                        return fail("S4", x=x, X=X, Y=Y, y=y)
    return ok("S4")


def _s4_circ(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        for X in t.fams[x]:
            for y in members(t.ingr[x]):
                if not any(is_member(z, t.sov[y]) for z in members(X)):
                    return fail("S4°", x=x, X=X, y=y)
    return ok("S4°")


def _s5(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        parts = t.ingr[x]
        for X in all_subsets(t.n):
            if t.predense(X, parts) and (parts & t.ingr_of(X)) not in t.look[x]:
                return fail("S5", x=x, X=X)
    return ok("S5")


def _ssigma(t: _Tables) -> AxiomVerdict:
    # A finite family is closed under unions of non-empty subfamilies
    # iff it is closed under binary unions.
    for x in range(t.n):
        fam = t.fams[x]
        for i, X in enumerate(fam):
            for Y in fam[i + 1 :]:
                if (X | Y) not in t.look[x]:
                    return fail("SΣ", x=x, family=(X, Y))
    return ok("SΣ")


def _wsp(t: _Tables, name: str = "WSP") -> AxiomVerdict:
    for x in range(t.n):
        for y in range(t.n):
            if x != y and (1 << y) in t.look[x]:
                return fail(name, x=x, y=y)
    return ok(name)


def _normalise(names: Iterable[str], known: tuple[str, ...]) -> tuple[str, ...]:
    out = []
    for name in names:
        name = ALIASES.get(name, name)
        if name not in known:
            raise KeyError(f"unknown axiom {name!r}")
        out.append(name)
    return tuple(out)


def check_sum_axioms(
    s: SumStructure | SumRelation,
    which: Iterable[str] | None = None,
    strict_s1: bool = False,
) -> AxiomReport:
    """Decide the requested sum axioms (S1-S5 by default).

    With ``strict_s1`` the sum demanded by S1 must be a member of the
    collection itself rather than any element of the domain.
    """
    t = _tables(_rel(s))
    names = CORE_SUM_AXIOMS if which is None else _normalise(which, SUM_AXIOMS)
    checks = {
        "S1": lambda: _s1(t, strict_s1),
        "S2": lambda: _s2(t),
        "S3": lambda: _s3(t),
        "S4": lambda: _s4(t),
        "S4°": lambda: _s4_circ(t),
        "S5": lambda: _s5(t),
        "SΣ": lambda: _ssigma(t),
        "WSP": lambda: _wsp(t),
    }
    return AxiomReport(tuple(checks[name]() for name in names))


def is_sum_model(s: SumStructure | SumRelation) -> bool:
    return check_sum_axioms(s).holds


# -- derived theorems ------------------------------------------------------


def _antisymmetry(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        for y in range(t.n):
            if x != y and is_member(x, t.ingr[y]) and is_member(y, t.ingr[x]):
                return fail("antisymmetry", x=x, y=y)
    return ok("antisymmetry")


def _transitivity(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        for y in range(t.n):
            if not is_member(x, t.ingr[y]):
                continue
            for z in range(t.n):
                if is_member(y, t.ingr[z]) and not is_member(x, t.ingr[z]):
                    return fail("transitivity", x=x, y=y, z=z)
    return ok("transitivity")


def _reflexivity(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        if not is_member(x, t.ingr[x]):
            return fail("reflexivity", x=x)
    return ok("reflexivity")


def _own_parts_predense(t: _Tables) -> AxiomVerdict:
    for y in range(t.n):
        if not t.predense(1 << y, t.ingr[y]):
            return fail("own-parts-predense", y=y)
    return ok("own-parts-predense")


def _own_parts_sum(t: _Tables) -> AxiomVerdict:
    for y in range(t.n):
        if t.ingr[y] not in t.look[y]:
            return fail("own-parts-sum", y=y)
    return ok("own-parts-sum")


def _self_sum(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        if (1 << x) not in t.look[x]:
            return fail("self-sum", x=x)
    return ok("self-sum")


def _no_empty_sum(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        if 0 in t.look[x]:
            return fail("no-empty-sum", x=x)
    return ok("no-empty-sum")


def _aux1(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        parts = t.ingr[x]
        for X in all_subsets(t.n):
            if X & ~parts == 0 and t.ingr_of(X) & ~parts:
                return fail("aux-1", x=x, X=X)
    return ok("aux-1")


def _aux2(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        for X in t.fams[x]:
            if (t.ingr[x] & t.ingr_of(X)) not in t.look[x]:
                return fail("aux-2", x=x, X=X)
    return ok("aux-2")


def _aux3(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        for X in t.fams[x]:
            if t.ingr_of(X) & ~t.ingr[x]:
                return fail("aux-3", x=x, X=X)
    return ok("aux-3")


def _aux4(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        for X in all_subsets(t.n):
            if (X in t.look[x]) != (t.ingr_of(X) in t.look[x]):
                return fail("aux-4", x=x, X=X)
    return ok("aux-4")


def _s5_var(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        parts = t.ingr[x]
        for X in all_subsets(t.n):
            if X & ~parts == 0 and t.predense(X, parts) and X not in t.look[x]:
                return fail("S5-var", x=x, X=X)
    return ok("S5-var")


def _partition(t: _Tables) -> AxiomVerdict:
    for x in range(t.n):
        if not t.fams[x]:
            return fail("partition", x=x)
    for X in all_subsets(t.n, nonempty_only=True):
        if not any(X in look for look in t.look):
            return fail("partition", X=X)
    for x in range(t.n):
        if 0 in t.look[x]:
            return fail("partition", x=x, X=0)
    for x in range(t.n):
        for y in range(t.n):
            if x == y or t.look[x] == t.look[y]:
                continue
            shared = sorted(t.look[x] & t.look[y])
            if shared:
                return fail("partition", x=x, y=y, X=shared[0])
    return ok("partition")


def _ingr_union(r: SumRelation) -> AxiomVerdict:
    for x in range(r.size):
        union = 0
        for X in r.families[x]:
            union |= X
        if ingr_set(r, x) != union:
            return fail("ingr-union", x=x)
    return ok("ingr-union")


def _overlap_fact(r: SumRelation, t: _Tables, induced: PartRelation) -> AxiomVerdict:
    for x in range(t.n):
        for y in range(t.n):
            common = t.ingr[x] & t.ingr[y] != 0
            overl = s_overlap(r, x, y) == common == overlap_p(induced, x, y)
            ext = s_disjoint(r, x, y) == (not common) == disjoint_p(induced, x, y)
            if not (overl and ext):
                return fail("overlap-fact", x=x, y=y)
    return ok("overlap-fact")


def _sum_agreement(r: SumRelation, t: _Tables, induced: PartRelation) -> AxiomVerdict:
    for x in range(t.n):
        for X in all_subsets(t.n):
            if (X in t.look[x]) != sum_induced_holds(induced, x, X):
                return fail("sum-agreement", x=x, X=X)
    return ok("sum-agreement")


def derived_theorem_suite(s: SumStructure | SumRelation) -> AxiomReport:
    """Check every derived theorem of sum structures by exhaustive search.

    Meaningful on models of S1-S5; on other structures failures are
    expected and reported with witnesses.
    """
    r = _rel(s)
    t = _tables(r)
    induced = induced_part_relation(r)
    checks = {
        "antisymmetry": lambda: _antisymmetry(t),
        "transitivity": lambda: _transitivity(t),
        "reflexivity": lambda: _reflexivity(t),
        "own-parts-predense": lambda: _own_parts_predense(t),
        "own-parts-sum": lambda: _own_parts_sum(t),
        "WSP": lambda: _wsp(t),
        "self-sum": lambda: _self_sum(t),
        "no-empty-sum": lambda: _no_empty_sum(t),
        "aux-1": lambda: _aux1(t),
        "aux-2": lambda: _aux2(t),
        "aux-3": lambda: _aux3(t),
        "aux-4": lambda: _aux4(t),
        "S5-var": lambda: _s5_var(t),
        "partition": lambda: _partition(t),
        "ingr-union": lambda: _ingr_union(r),
        "SΣ": lambda: _ssigma(t),
        "overlap-fact": lambda: _overlap_fact(r, t, induced),
        "sum-agreement": lambda: _sum_agreement(r, t, induced),
    }
    return AxiomReport(tuple(checks[name]() for name in DERIVED_THEOREMS))


# -- witness replay ---------------------------------------------------------


def replay_sum_witness(
    s: SumStructure | SumRelation, verdict: AxiomVerdict, strict_s1: bool = False
) -> bool:
    """True when the witness is an instance violating the named statement.

    Uses only the literal definitions above, never the checker tables.
    """
    r = _rel(s)
    n = r.size
    w = verdict.witness
    if w is None:
        return False
    name = verdict.axiom
    plus = r.holds
    ingr = lambda x: ingr_set(r, x)  # noqa: E731
    ingr_of = lambda A: ingr_set_family(r, A)  # noqa: E731

    if name == "S1":
        X = w["X"]
        pool = members(X) if strict_s1 else range(n)
        return X != 0 and not any(plus(x, X) for x in pool)
    if name == "S2":
        return w["x"] != w["y"] and plus(w["x"], w["X"]) and plus(w["y"], w["X"])
    if name == "S3":
        x, X, y, Y = w["x"], w["X"], w["y"], w["Y"]
        return plus(x, X) and plus(y, Y) and is_member(x, Y) and not plus(y, X | Y)
    if name == "S4":
        x, X, Y, y = w["x"], w["X"], w["Y"], w["y"]
        return (
            plus(x, X)
            and plus(x, Y)
            and is_member(y, Y)
            and not any(s_overlap(r, z, y) for z in members(X))
        )
    if name == "S4°":
        x, X, y = w["x"], w["X"], w["y"]
        return (
            plus(x, X)
            and part_induced(r, y, x)
            and not any(s_overlap(r, y, z) for z in members(X))
        )
    if name == "S5":
        x, X = w["x"], w["X"]
        return pre_dense(r, X, ingr(x)) and not plus(x, ingr(x) & ingr_of(X))
    if name == "SΣ":
        x, family = w["x"], w["family"]
        union = 0
        for X in family:
            union |= X
        return bool(family) and all(plus(x, X) for X in family) and not plus(x, union)
    if name == "WSP":
        return w["x"] != w["y"] and plus(w["x"], 1 << w["y"])
    if name == "antisymmetry":
        x, y = w["x"], w["y"]
        return x != y and part_induced(r, x, y) and part_induced(r, y, x)
    if name == "transitivity":
        x, y, z = w["x"], w["y"], w["z"]
        return part_induced(r, x, y) and part_induced(r, y, z) and not part_induced(r, x, z)
    if name == "reflexivity":
        return not part_induced(r, w["x"], w["x"])
    if name == "own-parts-predense":
        return not pre_dense(r, 1 << w["y"], ingr(w["y"]))
    if name == "own-parts-sum":
        return not plus(w["y"], ingr(w["y"]))
    if name == "self-sum":
        return not plus(w["x"], 1 << w["x"])
    if name == "no-empty-sum":
        return plus(w["x"], 0)
    if name == "aux-1":
        x, X = w["x"], w["X"]
        return X & ~ingr(x) == 0 and ingr_of(X) & ~ingr(x) != 0
    if name == "aux-2":
        x, X = w["x"], w["X"]
        return plus(x, X) and not plus(x, ingr(x) & ingr_of(X))
    if name == "aux-3":
        x, X = w["x"], w["X"]
        return plus(x, X) and ingr_of(X) & ~ingr(x) != 0
    if name == "aux-4":
        x, X = w["x"], w["X"]
        return plus(x, X) != plus(x, ingr_of(X))
    if name == "S5-var":
        x, X = w["x"], w["X"]
        return X & ~ingr(x) == 0 and pre_dense(r, X, ingr(x)) and not plus(x, X)
    if name == "partition":
        keys = set(w)
        if keys == {"x"}:
            return not r.families[w["x"]]
        if keys == {"X"}:
            return w["X"] != 0 and not r.sums_of(w["X"])
        if keys == {"x", "X"}:
            return w["X"] == 0 and plus(w["x"], 0)
        x, y, X = w["x"], w["y"], w["X"]
        return plus(x, X) and plus(y, X) and r.families[x] != r.families[y]
    if name == "ingr-union":
        union = 0
        for X in r.families[w["x"]]:
            union |= X
        return ingr(w["x"]) != union
    if name == "overlap-fact":
        x, y = w["x"], w["y"]
        induced = induced_part_relation(r)
        common = ingr(x) & ingr(y) != 0
        return not (
            s_overlap(r, x, y) == common == overlap_p(induced, x, y)
            and s_disjoint(r, x, y) == (not common) == disjoint_p(induced, x, y)
        )
    if name == "sum-agreement":
        return plus(w["x"], w["X"]) != sum_wrt_induced(r, w["x"], w["X"])
    raise KeyError(name)
