"""Moving between parthood and sum structures, and checking the round trips."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .model import (
    MereoStructure,
    PartRelation,
    SumRelation,
    SumStructure,
    all_subsets,
    make_domain,
    default_labels,
)
from .parthood import induced_sum_relation, is_mereological, sum_induced_holds
from .sums import induced_part_relation, is_sum_model


def induce_sum(m: MereoStructure) -> SumStructure:
    return SumStructure(m.domain, induced_sum_relation(m))


def induce_part(s: SumStructure) -> MereoStructure:
    return MereoStructure(s.domain, induced_part_relation(s))


@dataclass(frozen=True)
class RoundtripReport:
    direction: str
    original: PartRelation | SumRelation
    reconstructed: PartRelation | SumRelation
    equal: bool
    difference: tuple[int, int] | None
    in_theory: bool

    def __post_init__(self) -> None:
        if self.equal != (self.difference is None):
            raise ValueError("a round trip differs exactly when a difference is recorded")


def roundtrip_part(m: MereoStructure) -> RoundtripReport:
    """Compare ⊑ with the parthood recovered from its induced sums.

    ``difference`` is the first pair ``(x, y)`` on which they disagree.
    """
    back = induced_part_relation(induced_sum_relation(m))
    n = m.size
    diff = next(
        (
            (x, y)
            for x in range(n)
            for y in range(n)
            if m.part.holds(x, y) != back.holds(x, y)
        ),
        None,
    )
    return RoundtripReport(
        "part-first", m.part, back, diff is None, diff, is_mereological(m)
    )


def roundtrip_sum(s: SumStructure) -> RoundtripReport:
    """Compare ``+`` with the sum defined from its own s-part relation.

    ``difference`` is the first ``(x, X)`` on which they disagree.
    """
    n = s.size
    parts = induced_part_relation(s)
    diff = None
    rebuilt = []
    for x in range(n):
        fam = []
        for X in all_subsets(n):
            induced = sum_induced_holds(parts, x, X)
            if induced:
                fam.append(X)
            if diff is None and induced != s.sum.holds(x, X):
                diff = (x, X)
        rebuilt.append(tuple(fam))
    return RoundtripReport(
        "sum-first", s.sum, SumRelation(tuple(rebuilt)), diff is None, diff,
        is_sum_model(s),
    )


@dataclass
class BijectionResult:
    ok: bool
    pairs: list[tuple[int, int]] = field(default_factory=list)
    unpaired_part: list[int] = field(default_factory=list)
    unpaired_sum: list[int] = field(default_factory=list)
    not_inverse: list[int] = field(default_factory=list)


def verify_bijection(
    n: int,
    ms_models: Sequence[MereoStructure | PartRelation],
    s_models: Sequence[SumStructure | SumRelation],
) -> BijectionResult:
    """Pair parthood models with sum models through :func:`induce_sum`.

    ``pairs`` holds ``(i, j)`` index pairs into the two lists. The map is
    a bijection when every model on either side is paired exactly once
    and :func:`induce_part` sends each sum model back to its partner.
    """
    parts = [m.part if isinstance(m, MereoStructure) else m for m in ms_models]
    sums = [s.sum if isinstance(s, SumStructure) else s for s in s_models]
    if any(p.size != n for p in parts) or any(s.size != n for s in sums):
        raise ValueError(f"all models must live on a domain of size {n}")
    where = {}
    for j, s in enumerate(sums):
        where.setdefault(s, j)
    result = BijectionResult(ok=True)
    hit = [0] * len(sums)
    for i, p in enumerate(parts):
        j = where.get(induced_sum_relation(p))
        if j is None:
            result.unpaired_part.append(i)
            continue
        hit[j] += 1
        result.pairs.append((i, j))
        if induced_part_relation(sums[j]) != p:
            result.not_inverse.append(j)
    result.unpaired_sum = [j for j, h in enumerate(hit) if h != 1]
    result.ok = not (result.unpaired_part or result.unpaired_sum or result.not_inverse)
    return result


def wrap_part(rel: PartRelation, labels: Sequence[str] | None = None) -> MereoStructure:
    return MereoStructure(make_domain(labels or default_labels(rel.size)), rel)


def wrap_sum(rel: SumRelation, labels: Sequence[str] | None = None) -> SumStructure:
    return SumStructure(make_domain(labels or default_labels(rel.size)), rel)
