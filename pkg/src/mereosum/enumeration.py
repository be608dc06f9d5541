"""Exhaustive enumeration of parthood models and sum models on small domains.

Parthood models are found by growing labelled partial orders one element
at a time (each new element picks a down-closed set below it and an
up-closed set above it), which keeps P1-P3 true by construction, then
filtering the complete orders by P4 and P5. At the last step only
extensions that leave a greatest element are generated: P5 applied to
the whole domain demands one, so nothing is lost.

Sum models are searched as maps from non-empty subsets to their sums.
Singletons are pinned to themselves (every sum model has ``x + {x}``),
the empty set gets no sum (no sum model sums it), and S3 is enforced
while the map is being filled in. Complete maps are then checked against
all of S1-S5.

``workers > 1`` splits the search space into disjoint prefixes handled in
a process pool; results are merged and sorted, so output does not depend
on the worker count.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .model import (
    Domain,
    MereoStructure,
    PartRelation,
    SumRelation,
    SumStructure,
    default_labels,
    make_domain,
    members,
)
from .parthood import induced_sum_relation
from .sums import check_sum_axioms

MAX_MEREO_N = 7
MAX_DIRECT_SUM_N = 4

PartKey = tuple[int, ...]
SumKey = tuple[tuple[int, ...], ...]


class EnumerationLimitError(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    theory: str
    labeled_count: int
    iso_count: int | None
    models: tuple | None
    elapsed: float
    via_bijection: bool = False

    def structures(self, labels: Sequence[str] | None = None) -> list:
        """Wrap the collected relations in structures over one shared domain."""
        if self.models is None:
            raise ValueError("models were not collected")
        dom = make_domain(labels or default_labels(self.n))
        if self.theory == "MS":
            return [MereoStructure(dom, PartRelation(k)) for k in self.models]
        return [SumStructure(dom, SumRelation(k)) for k in self.models]


# -- parthood models ----------------------------------------------------------


def _closed_sets(rows: Sequence[int], k: int) -> list[int]:
    """Masks over ``range(k)`` closed under ``rows`` (row[i] is i's closure)."""
    union = [0] * (1 << k)
    out = [0]
    for mask in range(1, 1 << k):
        low = mask & -mask
        union[mask] = union[mask ^ low] | rows[low.bit_length() - 1]
        if union[mask] == mask:
            out.append(mask)
    return out


def _extensions(down: tuple[int, ...], top_only: bool) -> Iterable[tuple[int, ...]]:
    """All partial orders on ``len(down) + 1`` points restricting to ``down``."""
    k = len(down)
    new_bit = 1 << k
    full = new_bit - 1
    if top_only:
        tops = [t for t in range(k) if down[t] == full]
        if not tops:
            # The new element must become the greatest one.
            yield down + (full | new_bit,)
            return
    up = [0] * k
    for y, d in enumerate(down):
        for x in members(d):
            up[x] |= 1 << y
    ideals = _closed_sets(down, k)
    filters = _closed_sets(up, k)
    for U in filters:
        below_all = full
        for u in members(U):
            below_all &= down[u]
        for D in ideals:
            if D & U or D & ~below_all:
                continue
            if top_only and U == 0 and D != full:
                continue
            rows = list(down)
            for u in members(U):
                rows[u] |= new_bit
            rows.append(D | new_bit)
            yield tuple(rows)


def _p4_fast(down: tuple[int, ...]) -> bool:
    n = len(down)
    for x in range(n):
        parts = list(members(down[x]))
        for y in range(n):
            if (down[y] >> x) & 1:
                continue
            dy = down[y]
            if not any(down[z] & dy == 0 for z in parts):
                return False
    return True


def _p5_fast(down: tuple[int, ...]) -> bool:
    n = len(down)
    reach = [0] * (1 << n)
    for X in range(1, 1 << n):
        low = X & -X
        reach[X] = reach[X ^ low] | down[low.bit_length() - 1]
        rX = reach[X]
        for x in range(n):
            dx = down[x]
            if X & ~dx:
                continue
            if all(down[a] & rX for a in members(dx)):
                break
        else:
            return False
    return True


def _grow_posets(seeds: Iterable[tuple[int, ...]], n: int, prune: bool) -> list[PartKey]:
    found = []
    stack = list(seeds)
    while stack:
        down = stack.pop()
        k = len(down)
        if k == n:
            if _p4_fast(down) and _p5_fast(down):
                found.append(down)
            continue
        stack.extend(_extensions(down, top_only=prune and k == n - 1))
    return found


def _poset_prefix(n: int, depth: int) -> list[tuple[int, ...]]:
    level = [(1,)]
    for k in range(1, depth):
        level = [e for d in level for e in _extensions(d, top_only=False)]
    return level


def _mereo_task(args: tuple[list[tuple[int, ...]], int, bool]) -> list[PartKey]:
    seeds, n, prune = args
    return _grow_posets(seeds, n, prune)


def _run_parallel(task: Callable, chunks: list, workers: int) -> list:
    if workers <= 1 or len(chunks) <= 1:
        return [x for c in chunks for x in task(c)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [x for part in pool.map(task, chunks) for x in part]


def _chunk(items: list, parts: int) -> list[list]:
    parts = max(1, min(parts, len(items)))
    return [items[i::parts] for i in range(parts)]


def enumerate_mereo(
    n: int,
    collect: bool = True,
    up_to_iso: bool = False,
    workers: int = 1,
    prune: bool = True,
) -> EnumerationResult:
    """Every relation on ``range(n)`` satisfying P1-P5, each exactly once."""
    if not 1 <= n <= MAX_MEREO_N:
        raise EnumerationLimitError(f"parthood enumeration supports 1 <= n <= {MAX_MEREO_N}")
    start = time.perf_counter()
    depth = min(n, 4)
    seeds = _poset_prefix(n, depth)
    chunks = [(c, n, prune) for c in _chunk(seeds, max(workers, 1) * 4)]
    models = sorted(_run_parallel(_mereo_task, chunks, workers))
    iso = canonical_count(models, "MS", n) if up_to_iso else None
    return EnumerationResult(
        n, "MS", len(models), iso, tuple(models) if collect else None,
        time.perf_counter() - start,
    )


# -- sum models -------------------------------------------------------------


def _s3_consistent(sigma: list[int], Z: int) -> bool:
    """S3 restricted to triples whose subsets are all assigned, for new ``Z``.

    Subsets are filled in ascending order, so every assigned subset other
    than a singleton is numerically below ``Z``.
    """
    z = sigma[Z]
    # Only triples with X | Y == Z are new: every other union involving Z
    # is a larger, still unassigned subset.
    sub = Z
    while sub:
        X = sub
        rest = Z & ~X
        # Y ranges over subsets of Z that cover the part of Z missing from X.
        extra = X
        while True:
            Y = rest | extra
            if (Y >> sigma[X]) & 1 and sigma[Y] != z:
                return False
            if extra == 0:
                break
            extra = (extra - 1) & X
        sub = (sub - 1) & Z
    return True


def _sigma_search(n: int, prefix: tuple[int, ...]) -> list[SumKey]:
    size = 1 << n
    sigma = [-1] * size
    for i in range(n):
        sigma[1 << i] = i
    free = [X for X in range(1, size) if X & (X - 1)]
    found: list[SumKey] = []

    for X, v in zip(free, prefix):
        sigma[X] = v
        if not _s3_consistent(sigma, X):
            return found

    def rec(i: int) -> None:
        if i == len(free):
            rel = SumRelation.from_function(n, {X: sigma[X] for X in range(1, size)})
            if check_sum_axioms(rel).holds:
                found.append(rel.families)
            return
        X = free[i]
        for v in range(n):
            sigma[X] = v
            if _s3_consistent(sigma, X):
                rec(i + 1)
        sigma[X] = -1

    rec(len(prefix))
    return found


def _sum_task(args: tuple[int, list[tuple[int, ...]]]) -> list[SumKey]:
    n, prefixes = args
    return [k for p in prefixes for k in _sigma_search(n, p)]


def _sum_unpruned(n: int) -> list[SumKey]:
    """Generate and test every total map on non-empty subsets, with or
    without a sum for the empty set; no constraint is assumed."""
    subsets = list(range(1, 1 << n))
    found = []
    for values in itertools.product(range(n), repeat=len(subsets)):
        base = dict(zip(subsets, values))
        for empty in [None, *range(n)]:
            sig = dict(base)
            if empty is not None:
                sig[0] = empty
            rel = SumRelation.from_function(n, sig)
            if check_sum_axioms(rel).holds:
                found.append(rel.families)
    return found


def enumerate_sum(
    n: int,
    collect: bool = True,
    up_to_iso: bool = False,
    workers: int = 1,
    prune: bool = True,
) -> EnumerationResult:
    """Every sum relation on ``range(n)`` satisfying S1-S5.

    Direct search covers ``n <= 4``. Larger domains (up to the parthood
    limit) are served by inducing sums from the parthood models, and the
    result is flagged ``via_bijection``. ``prune=False`` switches to plain
    generate-and-test, usable for ``n <= 3``.
    """
    if not 1 <= n <= MAX_MEREO_N:
        raise EnumerationLimitError(f"sum enumeration supports 1 <= n <= {MAX_MEREO_N}")
    start = time.perf_counter()
    via = False
    if not prune:
        if n > 3:
            raise EnumerationLimitError("unpruned sum search supports n <= 3")
        models = _sum_unpruned(n)
    elif n <= MAX_DIRECT_SUM_N:
        free = [X for X in range(1, 1 << n) if X & (X - 1)]
        depth = min(len(free), 2)
        prefixes = list(itertools.product(range(n), repeat=depth))
        chunks = [(n, c) for c in _chunk(prefixes, max(workers, 1) * 4)]
        models = _run_parallel(_sum_task, chunks, workers)
    else:
        via = True
        parts = enumerate_mereo(n, workers=workers).models
        models = [induced_sum_relation(PartRelation(k)).families for k in parts]
    models = sorted(models)
    iso = canonical_count(models, "S", n) if up_to_iso else None
    return EnumerationResult(
        n, "S", len(models), iso, tuple(models) if collect else None,
        time.perf_counter() - start, via,
    )


# -- isomorphism classes ------------------------------------------------------


def _permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for i in members(mask):
        out |= 1 << perm[i]
    return out


def _permute_part(key: PartKey, perm: Sequence[int]) -> PartKey:
    out = [0] * len(key)
    for y, d in enumerate(key):
        out[perm[y]] = _permute_mask(d, perm)
    return tuple(out)


def _permute_sum(key: SumKey, perm: Sequence[int]) -> SumKey:
    out: list[tuple[int, ...]] = [()] * len(key)
    for x, fam in enumerate(key):
        out[perm[x]] = tuple(sorted(_permute_mask(X, perm) for X in fam))
    return tuple(out)


def canonical_count(models: Iterable, theory: str, n: int | None = None) -> int:
    """Number of orbits of the labelled models under relabelling."""
    keys = []
    for m in models:
        if isinstance(m, MereoStructure):
            m = m.part.down
        elif isinstance(m, SumStructure):
            m = m.sum.families
        keys.append(tuple(m))
    if not keys:
        return 0
    n = len(keys[0]) if n is None else n
    permute = _permute_part if theory == "MS" else _permute_sum
    remaining = set(keys)
    perms = list(itertools.permutations(range(n)))
    orbits = 0
    while remaining:
        rep = min(remaining)
        orbit = {permute(rep, p) for p in perms}
        remaining -= orbit
        orbits += 1
    return orbits


def labels_for(domain: Domain | int) -> tuple[str, ...]:
    return domain.labels if isinstance(domain, Domain) else default_labels(domain)
