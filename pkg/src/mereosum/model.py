"""Finite domains, subsets as bitmasks, and the two structure kinds.

Elements are addressed by their index in the domain. A subset of a domain
of size ``n`` is an ``int`` whose bit ``i`` marks membership of element
``i``; the canonical subset order is plain numeric order of those ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_WIDTH = 64

Subset = int


class ModelError(ValueError):
    """Base class for invalid domains, relations and documents."""


class EmptyDomainError(ModelError):
    pass


class DuplicateLabelError(ModelError):
    pass


class DomainTooLargeError(ModelError):
    pass


class UnknownLabelError(ModelError):
    pass


class DimensionError(ModelError):
    pass


@dataclass(frozen=True)
class Domain:
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise EmptyDomainError("a domain needs at least one element")
        if len(self.labels) > MAX_WIDTH:
            raise DomainTooLargeError(
                f"domain has {len(self.labels)} elements, limit is {MAX_WIDTH}"
            )
        seen = set()
        for label in self.labels:
            if not isinstance(label, str) or not label:
                raise ModelError(f"labels must be non-empty strings, got {label!r}")
            if label in seen:
                raise DuplicateLabelError(f"duplicate label {label!r}")
            seen.add(label)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown label {label!r}") from None

    @property
    def full(self) -> Subset:
        return (1 << len(self.labels)) - 1

    def names(self, subset: Subset) -> list[str]:
        """Labels of the members of ``subset``, in domain order."""
        return [self.labels[i] for i in members(subset)]

    def format_subset(self, subset: Subset) -> str:
        return "{" + ",".join(self.names(subset)) + "}"


def make_domain(labels: Iterable[str]) -> Domain:
    return Domain(tuple(labels))


def subset_of(domain: Domain, names: Iterable[str]) -> Subset:
    bits = 0
    for name in names:
        bits |= 1 << domain.index(name)
    return bits


def all_subsets(domain: Domain | int, nonempty_only: bool = False) -> Iterator[Subset]:
    """Yield every subset of the domain in ascending numeric order."""
    n = domain if isinstance(domain, int) else len(domain)
    return iter(range(1 if nonempty_only else 0, 1 << n))


def members(subset: Subset) -> Iterator[int]:
    while subset:
        low = subset & -subset
        yield low.bit_length() - 1
        subset ^= low


def singleton(i: int) -> Subset:
    return 1 << i


def is_member(i: int, subset: Subset) -> bool:
    return (subset >> i) & 1 == 1


@dataclass(frozen=True)
class PartRelation:
    """An arbitrary binary relation on ``range(n)`` read as "part of".

    ``down[y]`` is the subset of all ``x`` with ``x ⊑ y``. No order
    property is assumed; axiom checks live in :mod:`mereosum.parthood`.
    """

    down: tuple[Subset, ...]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> PartRelation:
        down = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise DimensionError(f"pair ({x}, {y}) outside a domain of size {n}")
            down[y] |= 1 << x
        return cls(tuple(down))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[bool]]) -> PartRelation:
        n = len(matrix)
        return cls.from_pairs(
            n, ((x, y) for x in range(n) for y in range(n) if matrix[x][y])
        )

    @classmethod
    def identity(cls, n: int) -> PartRelation:
        return cls(tuple(1 << i for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.down)

    def holds(self, x: int, y: int) -> bool:
        return (self.down[y] >> x) & 1 == 1

    def up(self, x: int) -> Subset:
        bit = 1 << x
        return sum(1 << y for y, d in enumerate(self.down) if d & bit)

    def pairs(self) -> list[tuple[int, int]]:
        """All ``(x, y)`` with ``x ⊑ y``, sorted by ``(x, y)``."""
        n = len(self.down)
        return [(x, y) for x in range(n) for y in range(n) if self.holds(x, y)]

    def matrix(self) -> list[list[bool]]:
        n = len(self.down)
        return [[self.holds(x, y) for y in range(n)] for x in range(n)]

    def __post_init__(self) -> None:
        n = len(self.down)
        if n > MAX_WIDTH:
            raise DomainTooLargeError(f"relation on {n} elements exceeds {MAX_WIDTH}")
        for d in self.down:
            if d < 0 or d >> n:
                raise DimensionError("relation row has bits outside the domain")


@dataclass(frozen=True)
class SumRelation:
    """A hybrid relation between elements and subsets.

    ``families[x]`` holds every ``X`` with ``x + X``, sorted ascending.
    """

    families: tuple[tuple[Subset, ...], ...]
    _lookup: tuple[frozenset[Subset], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        n = len(self.families)
        if n > MAX_WIDTH:
            raise DomainTooLargeError(f"relation on {n} elements exceeds {MAX_WIDTH}")
        canon = []
        for fam in self.families:
            uniq = tuple(sorted(set(fam)))
            for s in uniq:
                if s < 0 or s >> n:
                    raise DimensionError("subset has bits outside the domain")
            canon.append(uniq)
        object.__setattr__(self, "families", tuple(canon))
        object.__setattr__(self, "_lookup", tuple(frozenset(f) for f in canon))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, Subset]]) -> SumRelation:
        fams: list[set[Subset]] = [set() for _ in range(n)]
        for x, X in pairs:
            if not 0 <= x < n:
                raise DimensionError(f"element {x} outside a domain of size {n}")
            fams[x].add(X)
        return cls(tuple(tuple(f) for f in fams))

    @classmethod
    def from_function(cls, n: int, sigma: dict[Subset, int]) -> SumRelation:
        """Graph of a (partial) map from subsets to their sums."""
        return cls.from_pairs(n, ((x, X) for X, x in sigma.items()))

    @classmethod
    def empty(cls, n: int) -> SumRelation:
        return cls(tuple(() for _ in range(n)))

    @property
    def size(self) -> int:
        return len(self.families)

    def holds(self, x: int, X: Subset) -> bool:
        return X in self._lookup[x]

    def pairs(self) -> list[tuple[int, Subset]]:
        return [(x, X) for x, fam in enumerate(self.families) for X in fam]

    def sums_of(self, X: Subset) -> list[int]:
        return [x for x, look in enumerate(self._lookup) if X in look]


def _check_width(domain: Domain, n: int) -> None:
    if len(domain) != n:
        raise DimensionError(
            f"relation has {n} elements but the domain has {len(domain)}"
        )


@dataclass(frozen=True)
class MereoStructure:
    domain: Domain
    part: PartRelation

    def __post_init__(self) -> None:
        _check_width(self.domain, self.part.size)

    @property
    def size(self) -> int:
        return len(self.domain)


@dataclass(frozen=True)
class SumStructure:
    domain: Domain
    sum: SumRelation

    def __post_init__(self) -> None:
        _check_width(self.domain, self.sum.size)

    @property
    def size(self) -> int:
        return len(self.domain)


def default_labels(n: int) -> tuple[str, ...]:
    """``a, b, c, ...`` for small domains, ``e0, e1, ...`` beyond 26."""
    if n <= 26:
        return tuple(chr(ord("a") + i) for i in range(n))
    return tuple(f"e{i}" for i in range(n))


def part_structure(labels: Sequence[str], pairs: Iterable[tuple[str, str]]) -> MereoStructure:
    """Build a parthood structure from labelled ``(part, whole)`` pairs."""
    dom = make_domain(labels)
    rel = PartRelation.from_pairs(len(dom), ((dom.index(x), dom.index(y)) for x, y in pairs))
    return MereoStructure(dom, rel)


def sum_structure(
    labels: Sequence[str], pairs: Iterable[tuple[str, Iterable[str]]]
) -> SumStructure:
    """Build a sum structure from labelled ``(sum, members)`` pairs."""
    dom = make_domain(labels)
    rel = SumRelation.from_pairs(
        len(dom), ((dom.index(x), subset_of(dom, names)) for x, names in pairs)
    )
    return SumStructure(dom, rel)
