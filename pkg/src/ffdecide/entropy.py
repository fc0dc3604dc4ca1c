"""Fuzziness measures over FFNs and entropy-based objective criterion weights.

Three per-element measures are available:

``cosine``
    The nonlinear measure ``(sqrt(2)*cos(pi*(mu^3-nu^3)/4) - 1)/(sqrt(2)-1)``.
    It is 0 exactly on crisp elements, 1 exactly when mu == nu, and symmetric
    under complementation.
``shannon``
    Probability-type entropy of the mass triple (mu^3, nu^3, h^3) with natural
    logarithm and 0*log(0) = 0.
``linear``
    A piecewise-linear absolute-difference measure; its raw value can leave
    [0, 1] at crisp points, so list-level results are clamped.

Objective criterion weights are shares of (1 - entropy) mass per criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DegenerateWeightsError, EmptyInputError, ShapeError
from .ffn import FFN, WeightVector

ENTROPY_MODELS = ("cosine", "shannon", "linear")
REDUCTIONS = ("mean", "sum")

_SQRT2 = math.sqrt(2.0)


def cosine_element(f: FFN) -> float:
    """Per-element cosine fuzziness, in [0, 1]."""
    return (_SQRT2 * math.cos(math.pi * (f.mu**3 - f.nu**3) / 4.0) - 1.0) / (_SQRT2 - 1.0)


def _plogp(p: float) -> float:
    return p * math.log(p) if p > 0.0 else 0.0


def shannon_element(f: FFN) -> float:
    """Per-element probability-type entropy of (mu^3, nu^3, h^3), base e."""
    mu3, nu3 = f.mu**3, f.nu**3
    h3 = max(1.0 - mu3 - nu3, 0.0)
    return -(_plogp(mu3) + _plogp(nu3) + _plogp(h3))


def linear_element(f: FFN) -> float:
    """Per-element linear fuzziness; raw value, may leave [0, 1]."""
    mu3, nu3 = f.mu**3, f.nu**3
    h3 = max(1.0 - mu3 - nu3, 0.0)
    penalty = (
        2.0 * abs(mu3 - nu3)
        + abs(mu3**2 - nu3**2)
        + abs(2.0 * (mu3 - nu3) + (h3**2 - nu3**2))
    )
    return 1.0 - penalty / 4.0


_ELEMENTS: dict[str, Callable[[FFN], float]] = {
    "cosine": cosine_element,
    "shannon": shannon_element,
    "linear": linear_element,
}


def _reduce(values: Sequence[float], model: str, reduction: str) -> float:
    if reduction not in REDUCTIONS:
        raise ShapeError(f"unknown reduction {reduction!r}; expected one of {REDUCTIONS}")
    total = sum(values)
    out = total / len(values) if reduction == "mean" else total
    if model == "linear" and reduction == "mean":
        out = min(max(out, 0.0), 1.0)
    return out


def _entropy(elements: Sequence[FFN], model: str) -> float:
    if len(elements) == 0:
        raise EmptyInputError("entropy of an empty list is undefined")
    elem = _ELEMENTS[model]
    return _reduce([elem(f) for f in elements], model, "mean")


def entropy_cosine(elements: Sequence[FFN]) -> float:
    return _entropy(elements, "cosine")


def entropy_shannon(elements: Sequence[FFN]) -> float:
    return _entropy(elements, "shannon")


def entropy_linear(elements: Sequence[FFN]) -> float:
    return _entropy(elements, "linear")


@dataclass(frozen=True)
class CriterionEntropies:
    """One entropy value per criterion column of a decision matrix."""

    values: tuple[float, ...]
    model: str
    reduction: str


def criterion_entropies(
    rows: Sequence[Sequence[FFN]],
    model: str = "cosine",
    reduction: str = "mean",
) -> CriterionEntropies:
    """Column-wise entropies of an alternatives x criteria grid of FFNs."""
    if model not in ENTROPY_MODELS:
        raise ShapeError(f"unknown entropy model {model!r}; expected one of {ENTROPY_MODELS}")
    if len(rows) == 0 or len(rows[0]) == 0:
        raise ShapeError("matrix must have at least one row and one column")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ShapeError("matrix rows have unequal lengths")
    elem = _ELEMENTS[model]
    values = tuple(
        _reduce([elem(row[j]) for row in rows], model, reduction) for j in range(width)
    )
    return CriterionEntropies(values, model, reduction)


def objective_weights(entropies: CriterionEntropies | Sequence[float]) -> WeightVector:
    """Weights proportional to (1 - entropy), normalized to sum 1.

    The formula is applied verbatim even when entropies exceed 1: all
    numerators then share the denominator's sign and the weights stay
    non-negative.  Mixed signs or a vanishing denominator have no meaningful
    weight interpretation and raise.
    """
    values = entropies.values if isinstance(entropies, CriterionEntropies) else tuple(entropies)
    if len(values) == 0:
        raise EmptyInputError("need at least one entropy value")
    slack = [1.0 - e for e in values]
    denom = sum(slack)
    if denom == 0.0:
        raise DegenerateWeightsError("entropy slack (1 - E) sums to zero")
    weights = [s / denom for s in slack]
    if any(w < 0.0 for w in weights):
        raise DegenerateWeightsError(
            "entropy configuration mixes signs of (1 - E); weights would be negative"
        )
    return WeightVector(weights)
