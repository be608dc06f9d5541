"""Verdicts and reports shared by both theories.

A witness maps role names to values. By convention lowercase roles hold
element indices, uppercase roles hold subsets (bitmask ints) and the
``family`` role holds a tuple of subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator, Mapping

from .model import Domain, subset_of

FAMILY_ROLE = "family"


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    holds: bool
    witness: Mapping[str, Any] | None = None

    def __post_init__(self) -> None:
        if self.holds == (self.witness is not None):
            raise ValueError(
                f"{self.axiom}: a verdict carries a witness exactly when it fails"
            )

    def describe(self, domain: Domain) -> str:
        if self.holds:
            return f"{self.axiom} holds"
        return f"{self.axiom} FAILS, witness {format_witness(self.witness, domain)}"


@dataclass(frozen=True)
class AxiomReport:
    verdicts: tuple[AxiomVerdict, ...]

    def __iter__(self) -> Iterator[AxiomVerdict]:
        return iter(self.verdicts)

    def __len__(self) -> int:
        return len(self.verdicts)

    def __getitem__(self, axiom: str) -> AxiomVerdict:
        for v in self.verdicts:
            if v.axiom == axiom:
                return v
        raise KeyError(axiom)

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def failures(self) -> list[AxiomVerdict]:
        return [v for v in self.verdicts if not v.holds]

    def profile(self) -> dict[str, bool]:
        return {v.axiom: v.holds for v in self.verdicts}


def ok(axiom: str) -> AxiomVerdict:
    return AxiomVerdict(axiom, True)


def fail(axiom: str, **witness: Any) -> AxiomVerdict:
    return AxiomVerdict(axiom, False, witness)


def _role_is_subset(role: str) -> bool:
    return role[:1].isupper()


def render_value(role: str, value: Any, domain: Domain) -> Any:
    """Witness value with labels in place of indices (JSON friendly)."""
    if role == FAMILY_ROLE:
        return [domain.names(s) for s in value]
    if _role_is_subset(role):
        return domain.names(value)
    return domain.labels[value]


def parse_value(role: str, value: Any, domain: Domain) -> Any:
    if role == FAMILY_ROLE:
        return tuple(subset_of(domain, names) for names in value)
    if _role_is_subset(role):
        return subset_of(domain, value)
    return domain.index(value)


def format_witness(witness: Mapping[str, Any], domain: Domain) -> str:
    parts = []
    for role, value in witness.items():
        if role == FAMILY_ROLE:
            shown = "{" + ", ".join(domain.format_subset(s) for s in value) + "}"
        elif _role_is_subset(role):
            shown = domain.format_subset(value)
        else:
            shown = domain.labels[value]
        parts.append(f"{role}={shown}")
    return " ".join(parts)


def report_to_dict(report: AxiomReport, domain: Domain) -> dict:
    return {
        "holds": report.holds,
        "verdicts": [
            {
                "axiom": v.axiom,
                "holds": v.holds,
                "witness": None
                if v.witness is None
                else {r: render_value(r, val, domain) for r, val in v.witness.items()},
            }
            for v in report
        ],
    }


def report_from_dict(data: Mapping[str, Any], domain: Domain) -> AxiomReport:
    verdicts = []
    for item in data["verdicts"]:
        w = item.get("witness")
        if w is not None:
            w = {r: parse_value(r, val, domain) for r, val in w.items()}
        verdicts.append(AxiomVerdict(item["axiom"], bool(item["holds"]), w))
    return AxiomReport(tuple(verdicts))
