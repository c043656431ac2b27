"""Plain record types shared by the enumerator, verifier and CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .graph import Graph

KINDS = ("independence", "pendant", "edge_connectivity", "chromatic")

# short names used on the command line and in CSV output
KIND_ALIASES = {
    "beta": "independence",
    "independence": "independence",
    "p": "pendant",
    "pendant": "pendant",
    "k": "edge_connectivity",
    "edge_connectivity": "edge_connectivity",
    "chi": "chromatic",
    "chromatic": "chromatic",
}


@dataclass(frozen=True)
class ParamConstraint:
    kind: str
    value: int

    def __post_init__(self) -> None:
        kind = KIND_ALIASES.get(self.kind)
        if kind is None:
            raise ValueError(f"unknown invariant {self.kind!r}; expected one of {KINDS}")
        object.__setattr__(self, "kind", kind)
        if self.value < 1:
            raise ValueError(f"constraint value must be >= 1, got {self.value}")

    def __str__(self) -> str:
        return f"{self.kind}={self.value}"


def _g6(g: Graph) -> str:
    from .graph6 import write_graph6

    return write_graph6(g)


@dataclass
class ExtremalReport:
    n: int
    constraint: ParamConstraint
    class_size: int
    max_value: Optional[float]
    maximizer_iso_classes: list[Graph] = field(default_factory=list)
    labeled_maximizers: int = 0
    runner_up_gap: Optional[float] = None
    formula_value: Optional[float] = None
    construction: Optional[Graph] = None
    unique_and_matches: bool = False
    informational: bool = False

    @property
    def empty(self) -> bool:
        return self.class_size == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "extremal",
            "n": self.n,
            "constraint": {"kind": self.constraint.kind, "value": self.constraint.value},
            "class_size": self.class_size,
            "max_value": self.max_value,
            "formula_value": self.formula_value,
            "maximizer_iso_classes": [_g6(g) for g in self.maximizer_iso_classes],
            "labeled_maximizers": self.labeled_maximizers,
            "construction": _g6(self.construction) if self.construction is not None else None,
            "unique_and_matches": self.unique_and_matches,
            "runner_up_gap": self.runner_up_gap,
            "informational": self.informational,
        }


@dataclass
class ConjectureReport:
    n: int
    chi: int
    turan_value: float
    brute_max: Optional[float]
    holds: bool
    witness: list[Graph] = field(default_factory=list)
    class_size: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "conjecture",
            "n": self.n,
            "chi": self.chi,
            "turan_value": self.turan_value,
            "brute_max": self.brute_max,
            "holds": self.holds,
            "witness": [_g6(g) for g in self.witness],
            "class_size": self.class_size,
        }
