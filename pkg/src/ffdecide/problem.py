"""Decision problem data model and the built-in regional energy-poverty case.

A :class:`DecisionProblem` holds everything the pipeline needs: criteria with
benefit/cost orientations, alternatives, an expert panel with linguistic
reliability grades, the linguistic scale, the expert-major evaluation tensor,
and per-expert criterion-importance gradings.  Validation is strict and every
failure names the offending path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import UnknownCaseError, ValidationError
from .ffn import DEFAULT_SCALE, LinguisticScale
from .marcos import ORIENTATIONS


@dataclass(frozen=True)
class Criterion:
    id: str
    name: str
    orientation: str


@dataclass(frozen=True)
class Alternative:
    id: str
    name: str


@dataclass(frozen=True)
class Expert:
    id: str
    grade: str


@dataclass(frozen=True)
class DecisionProblem:
    """A complete multi-expert linguistic evaluation problem.

    ``evaluations`` is expert-major: ``evaluations[e][a][c]`` is the term
    expert ``e`` assigned to alternative ``a`` under criterion ``c``.
    ``criterion_importance[e][c]`` is expert ``e``'s importance grade of
    criterion ``c``.
    """

    title: str
    criteria: tuple[Criterion, ...]
    alternatives: tuple[Alternative, ...]
    experts: tuple[Expert, ...]
    evaluations: tuple[tuple[tuple[str, ...], ...], ...]
    criterion_importance: tuple[tuple[str, ...], ...]
    scale: LinguisticScale = field(default_factory=lambda: DEFAULT_SCALE)

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        if not self.criteria:
            raise ValidationError("need at least one criterion", "criteria")
        if not self.alternatives:
            raise ValidationError("need at least one alternative", "alternatives")
        if not self.experts:
            raise ValidationError("need at least one expert", "experts")
        self._check_unique("criteria", [c.id for c in self.criteria])
        self._check_unique("alternatives", [a.id for a in self.alternatives])
        self._check_unique("experts", [e.id for e in self.experts])
        for i, c in enumerate(self.criteria):
            if c.orientation not in ORIENTATIONS:
                raise ValidationError(
                    f"orientation must be one of {ORIENTATIONS}, got {c.orientation!r}",
                    f"criteria[{i}].orientation",
                )
        for i, e in enumerate(self.experts):
            if e.grade not in self.scale:
                raise ValidationError(
                    f"grade {e.grade!r} not in scale", f"experts[{i}].grade"
                )
        n_e, n_a, n_c = len(self.experts), len(self.alternatives), len(self.criteria)
        if len(self.evaluations) != n_e:
            raise ValidationError(
                f"expected {n_e} expert blocks, got {len(self.evaluations)}", "evaluations"
            )
        for e, block in enumerate(self.evaluations):
            if len(block) != n_a:
                raise ValidationError(
                    f"expected {n_a} alternative rows, got {len(block)}", f"evaluations[{e}]"
                )
            for a, row in enumerate(block):
                if len(row) != n_c:
                    raise ValidationError(
                        f"expected {n_c} terms, got {len(row)}", f"evaluations[{e}][{a}]"
                    )
                for c, term in enumerate(row):
                    if term not in self.scale:
                        raise ValidationError(
                            f"term {term!r} not in scale", f"evaluations[{e}][{a}][{c}]"
                        )
        if len(self.criterion_importance) != n_e:
            raise ValidationError(
                f"expected {n_e} expert rows, got {len(self.criterion_importance)}",
                "criterion_importance",
            )
        for e, row in enumerate(self.criterion_importance):
            if len(row) != n_c:
                raise ValidationError(
                    f"expected {n_c} terms, got {len(row)}", f"criterion_importance[{e}]"
                )
            for c, term in enumerate(row):
                if term not in self.scale:
                    raise ValidationError(
                        f"term {term!r} not in scale", f"criterion_importance[{e}][{c}]"
                    )

    @staticmethod
    def _check_unique(path: str, ids: Sequence[str]) -> None:
        seen = set()
        for i, x in enumerate(ids):
            if x in seen:
                raise ValidationError(f"duplicate id {x!r}", f"{path}[{i}].id")
            seen.add(x)

    @property
    def criterion_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.criteria)

    @property
    def alternative_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.alternatives)

    @property
    def orientations(self) -> tuple[str, ...]:
        return tuple(c.orientation for c in self.criteria)


# ---------------------------------------------------------------------------
# Built-in case: regional energy poverty, seven regions x six factors,
# three experts graded AI / VI / VI.
# ---------------------------------------------------------------------------

_TURKIYE_CRITERIA = (
    ("A", "Income level", "cost"),
    ("B", "Energy price", "cost"),
    ("C", "Energy efficiency", "benefit"),
    ("D", "Building efficiency", "benefit"),
    ("E", "Climate", "benefit"),
    ("F", "Urbanization", "benefit"),
)

_TURKIYE_ALTERNATIVES = (
    ("R1", "Marmara"),
    ("R2", "Aegean"),
    ("R3", "Black Sea"),
    ("R4", "Mediterranean"),
    ("R5", "Eastern Anatolia"),
    ("R6", "Southeastern Anatolia"),
    ("R7", "Central Anatolia"),
)

_TURKIYE_EXPERTS = (("U1", "AI"), ("U2", "VI"), ("U3", "VI"))

# Per alternative x criterion: the three experts' terms in panel order.
_TURKIYE_JUDGMENTS: dict[str, dict[str, tuple[str, str, str]]] = {
    "R1": {"A": ("VI", "I", "I"), "B": ("AI", "I", "M"), "C": ("I", "M", "L"),
           "D": ("L", "VI", "VI"), "E": ("M", "M", "L"), "F": ("AI", "L", "M")},
    "R2": {"A": ("I", "I", "VI"), "B": ("VI", "I", "I"), "C": ("M", "L", "L"),
           "D": ("L", "M", "L"), "E": ("L", "M", "L"), "F": ("M", "M", "M")},
    "R3": {"A": ("I", "I", "VI"), "B": ("I", "I", "I"), "C": ("M", "M", "M"),
           "D": ("L", "L", "L"), "E": ("I", "L", "M"), "F": ("M", "M", "M")},
    "R4": {"A": ("M", "I", "VI"), "B": ("M", "I", "I"), "C": ("VL", "M", "M"),
           "D": ("VL", "M", "L"), "E": ("VL", "L", "L"), "F": ("M", "L", "M")},
    "R5": {"A": ("VI", "I", "I"), "B": ("I", "I", "VI"), "C": ("I", "M", "M"),
           "D": ("I", "M", "L"), "E": ("VI", "L", "L"), "F": ("L", "M", "I")},
    "R6": {"A": ("M", "I", "VI"), "B": ("M", "I", "I"), "C": ("L", "M", "M"),
           "D": ("L", "L", "M"), "E": ("L", "I", "I"), "F": ("L", "M", "M")},
    "R7": {"A": ("I", "I", "I"), "B": ("VI", "I", "M"), "C": ("I", "M", "I"),
           "D": ("I", "I", "I"), "E": ("VI", "M", "M"), "F": ("L", "M", "L")},
}

# Per criterion: the three experts' importance grades in panel order.
_TURKIYE_IMPORTANCE: dict[str, tuple[str, str, str]] = {
    "A": ("VI", "AI", "VI"),
    "B": ("VI", "AI", "I"),
    "C": ("L", "L", "L"),
    "D": ("I", "VI", "I"),
    "E": ("M", "M", "I"),
    "F": ("VL", "VL", "VL"),
}

TURKIYE_CASE_NAME = "turkiye-energy-poverty"


def _build_turkiye_case() -> DecisionProblem:
    crit_ids = [c[0] for c in _TURKIYE_CRITERIA]
    alt_ids = [a[0] for a in _TURKIYE_ALTERNATIVES]
    n_experts = len(_TURKIYE_EXPERTS)
    evaluations = tuple(
        tuple(
            tuple(_TURKIYE_JUDGMENTS[a][c][e] for c in crit_ids)
            for a in alt_ids
        )
        for e in range(n_experts)
    )
    importance = tuple(
        tuple(_TURKIYE_IMPORTANCE[c][e] for c in crit_ids) for e in range(n_experts)
    )
    return DecisionProblem(
        title="Regional energy poverty assessment (Turkiye, 7 regions x 6 factors)",
        criteria=tuple(Criterion(*c) for c in _TURKIYE_CRITERIA),
        alternatives=tuple(Alternative(*a) for a in _TURKIYE_ALTERNATIVES),
        experts=tuple(Expert(*e) for e in _TURKIYE_EXPERTS),
        evaluations=evaluations,
        criterion_importance=importance,
    )


_CASES = {TURKIYE_CASE_NAME: _build_turkiye_case}


def builtin_case(name: str) -> DecisionProblem:
    """Return a fresh copy of a bundled case by name."""
    try:
        factory = _CASES[name]
    except KeyError:
        raise UnknownCaseError(
            f"unknown case {name!r}; available: {', '.join(sorted(_CASES))}"
        ) from None
    return factory()


def case_names() -> tuple[str, ...]:
    return tuple(sorted(_CASES))
