"""Parthood structures: the axioms P1-P5 and the notions defined from ⊑.

All quantifiers range over the finite domain, so every axiom is decided
by exhaustive search. Failing checks report the least violating tuple in
canonical order (elements by index, subsets by numeric value).
"""

from __future__ import annotations

from typing import Iterable

from .model import (
    MereoStructure,
    PartRelation,
    Subset,
    SumRelation,
    all_subsets,
    members,
)
from .report import AxiomReport, AxiomVerdict, fail, ok

PART_AXIOMS = ("P1", "P2", "P3", "P4", "P4'", "P5", "P5'")
CORE_PART_AXIOMS = ("P1", "P2", "P3", "P4", "P5")


def _rel(m: MereoStructure | PartRelation) -> PartRelation:
    return m.part if isinstance(m, MereoStructure) else m


def overlap_p(m: MereoStructure | PartRelation, x: int, y: int) -> bool:
    """``x`` and ``y`` share a part."""
    down = _rel(m).down
    return down[x] & down[y] != 0


def disjoint_p(m: MereoStructure | PartRelation, x: int, y: int) -> bool:
    """No ``z`` is part of both ``x`` and ``y``."""
    r = _rel(m)
    return not any(r.holds(z, x) and r.holds(z, y) for z in range(r.size))


def sum_induced_holds(m: MereoStructure | PartRelation, x: int, X: Subset) -> bool:
    """``x`` is the sum of ``X`` under ⊑.

    Every member of ``X`` is part of ``x`` and every part of ``x``
    overlaps some member of ``X``.
    """
    r = _rel(m)
    if any(not r.holds(y, x) for y in members(X)):
        return False
    for a in range(r.size):
        if r.holds(a, x) and not any(overlap_p(r, a, y) for y in members(X)):
            return False
    return True


def _down_union(down: tuple[int, ...], X: Subset) -> int:
    acc = 0
    for y in members(X):
        acc |= down[y]
    return acc


def _submasks(mask: int) -> list[int]:
    out = []
    sub = mask
    while True:
        out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    out.reverse()
    return out


def _sum_family(down: tuple[int, ...], x: int) -> tuple[Subset, ...]:
    # Only subsets of down[x] can pass the first conjunct.
    parts = down[x]
    fam = []
    for X in _submasks(parts):
        reach = _down_union(down, X)
        if all(down[a] & reach for a in members(parts)):
            fam.append(X)
    return tuple(fam)


def induced_sum_relation(m: MereoStructure | PartRelation) -> SumRelation:
    down = _rel(m).down
    return SumRelation(tuple(_sum_family(down, x) for x in range(len(down))))


# -- axioms -----------------------------------------------------------------


def _p1(r: PartRelation) -> AxiomVerdict:
    for x in range(r.size):
        if not r.holds(x, x):
            return fail("P1", x=x)
    return ok("P1")


def _p2(r: PartRelation) -> AxiomVerdict:
    n = r.size
    for x in range(n):
        for y in range(n):
            if x != y and r.holds(x, y) and r.holds(y, x):
                return fail("P2", x=x, y=y)
    return ok("P2")


def _p3(r: PartRelation) -> AxiomVerdict:
    n = r.size
    for x in range(n):
        for y in range(n):
            if not r.holds(x, y):
                continue
            for z in range(n):
                if r.holds(y, z) and not r.holds(x, z):
                    return fail("P3", x=x, y=y, z=z)
    return ok("P3")


def _p4(r: PartRelation) -> AxiomVerdict:
    n = r.size
    for x in range(n):
        for y in range(n):
            if r.holds(x, y):
                continue
            supplemented = any(
                r.holds(z, x)
                and not any(r.holds(u, z) and r.holds(u, y) for u in range(n))
                for z in range(n)
            )
            if not supplemented:
                return fail("P4", x=x, y=y)
    return ok("P4")


def _p4_strong(r: PartRelation) -> AxiomVerdict:
    n = r.size
    for x in range(n):
        for y in range(n):
            if r.holds(x, y):
                continue
            if not any(r.holds(z, x) and disjoint_p(r, z, y) for z in range(n)):
                return fail("P4'", x=x, y=y)
    return ok("P4'")


def _p5_upper(r: PartRelation, x: int, X: Subset) -> bool:
    n = r.size
    if not all(r.holds(y, x) for y in members(X)):
        return False
    for a in range(n):
        if not r.holds(a, x):
            continue
        if not any(
            r.holds(z, y) and r.holds(z, a) for y in members(X) for z in range(n)
        ):
            return False
    return True


def _p5(r: PartRelation) -> AxiomVerdict:
    n = r.size
    for X in all_subsets(n, nonempty_only=True):
        if not any(_p5_upper(r, x, X) for x in range(n)):
            return fail("P5", X=X)
    return ok("P5")


def _p5_sum(r: PartRelation) -> AxiomVerdict:
    n = r.size
    for X in all_subsets(n, nonempty_only=True):
        if not any(sum_induced_holds(r, x, X) for x in range(n)):
            return fail("P5'", X=X)
    return ok("P5'")


_CHECKERS = {
    "P1": _p1,
    "P2": _p2,
    "P3": _p3,
    "P4": _p4,
    "P4'": _p4_strong,
    "P5": _p5,
    "P5'": _p5_sum,
}


def check_part_axioms(
    m: MereoStructure | PartRelation, which: Iterable[str] | None = None
) -> AxiomReport:
    """Decide the requested parthood axioms (P1-P5 by default)."""
    r = _rel(m)
    names = CORE_PART_AXIOMS if which is None else tuple(which)
    for name in names:
        if name not in _CHECKERS:
            raise KeyError(f"unknown parthood axiom {name!r}")
    return AxiomReport(tuple(_CHECKERS[name](r) for name in names))


def is_mereological(m: MereoStructure | PartRelation) -> bool:
    return check_part_axioms(m).holds


def replay_part_witness(m: MereoStructure | PartRelation, verdict: AxiomVerdict) -> bool:
    """True when the verdict's witness really is an instance violating its axiom."""
    r = _rel(m)
    n = r.size
    w = verdict.witness
    if w is None:
        return False
    a = verdict.axiom
    if a == "P1":
        return not r.holds(w["x"], w["x"])
    if a == "P2":
        x, y = w["x"], w["y"]
        return x != y and r.holds(x, y) and r.holds(y, x)
    if a == "P3":
        x, y, z = w["x"], w["y"], w["z"]
        return r.holds(x, y) and r.holds(y, z) and not r.holds(x, z)
    if a in ("P4", "P4'"):
        x, y = w["x"], w["y"]
        return not r.holds(x, y) and not any(
            r.holds(z, x) and not overlap_p(r, z, y) for z in range(n)
        )
    if a in ("P5", "P5'"):
        X = w["X"]
        return X != 0 and not any(sum_induced_holds(r, x, X) for x in range(n))
    raise KeyError(a)
