"""Expert weighting, stepwise subjective criterion weights, and the blend
of objective and subjective weight vectors.

The stepwise chain compares each criterion's crisp significance with its
predecessor in the fixed input order: a relative rating ``s_j`` (1 plus/minus
the successive difference), a coefficient ``kappa_j = 2 - s_j``, an initial
weight ``q_j = q_{j-1} / kappa_j`` seeded at 1, and finally the normalized
subjective weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, LengthMismatchError, ShapeError
from .ffn import FFN, LinguisticScale, WeightVector


@dataclass(frozen=True)
class ExpertPanel:
    """Experts with their linguistic reliability grades and derived weights."""

    experts: tuple[tuple[str, str], ...]
    weights: WeightVector


@dataclass(frozen=True)
class PipreciaTrace:
    """All intermediate columns of the stepwise weighting chain.

    ``s[0]`` is None: the first criterion has no predecessor to compare with.
    """

    crisp: tuple[float, ...]
    s: tuple[float | None, ...]
    kappa: tuple[float, ...]
    q: tuple[float, ...]
    subjective: WeightVector


@dataclass(frozen=True)
class WeightBundle:
    """Objective, subjective, and alpha-blended criterion weights."""

    objective: WeightVector
    subjective: WeightVector
    alpha: float
    integrated: WeightVector


def expert_weights(
    grades: Sequence[str],
    scale: LinguisticScale,
    ids: Sequence[str] | None = None,
) -> ExpertPanel:
    """Derive panel weights as normalized-score shares of the expert grades."""
    if len(grades) == 0:
        raise ShapeError("expert panel must not be empty")
    if ids is None:
        ids = tuple(f"S{i + 1}" for i in range(len(grades)))
    elif len(ids) != len(grades):
        raise LengthMismatchError(f"{len(ids)} ids vs {len(grades)} grades")
    scores = [scale[g].normalized_score for g in grades]
    total = sum(scores)
    weights = WeightVector(sc / total for sc in scores)
    return ExpertPanel(tuple(zip(ids, grades)), weights)


def crisp_significance(importance: Sequence[FFN]) -> list[float]:
    """Elementwise normalized score of aggregated criterion-importance FFNs."""
    return [f.normalized_score for f in importance]


def piprecia_chain(crisp: Sequence[float]) -> PipreciaTrace:
    """Run the stepwise chain over crisp significance values in input order."""
    values = tuple(float(c) for c in crisp)
    if len(values) == 0:
        raise ShapeError("need at least one crisp significance value")
    s: list[float | None] = [None]
    kappa = [1.0]
    q = [1.0]
    for j in range(1, len(values)):
        if values[j] > values[j - 1]:
            sj = 1.0 + (values[j] - values[j - 1])
        elif values[j] == values[j - 1]:
            sj = 1.0
        else:
            sj = 1.0 - (values[j - 1] - values[j])
        s.append(sj)
        kappa.append(2.0 - sj)
        q.append(q[j - 1] / kappa[j])
    total = sum(q)
    return PipreciaTrace(
        crisp=values,
        s=tuple(s),
        kappa=tuple(kappa),
        q=tuple(q),
        subjective=WeightVector(x / total for x in q),
    )


#: Slack for display-rounded weight vectors (published tables carry 3-digit
#: roundings whose sums drift off 1 by up to a few parts per thousand).
ROUNDED_SUM_TOL = 0.01


def _as_weights(values: Sequence[float], label: str) -> WeightVector:
    if isinstance(values, WeightVector):
        return values
    total = sum(float(v) for v in values) if len(values) else 0.0
    if abs(total - 1.0) <= 1e-9:
        return WeightVector(values)
    if abs(total - 1.0) <= ROUNDED_SUM_TOL:
        return WeightVector.normalized(values)
    raise DomainError(f"{label} weights sum to {total:.6g}, expected 1")


def integrate_weights(
    objective: Sequence[float],
    subjective: Sequence[float],
    alpha: float,
) -> WeightBundle:
    """Convex combination: alpha * objective + (1 - alpha) * subjective.

    Inputs whose sums are off 1 by display rounding (up to 1%) are
    renormalized before blending; the bundle stores the vectors actually
    blended, so the elementwise identity holds against its own fields.
    """
    if len(objective) != len(subjective):
        raise ShapeError(f"{len(objective)} objective vs {len(subjective)} subjective weights")
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    obj = _as_weights(objective, "objective")
    subj = _as_weights(subjective, "subjective")
    blended = WeightVector(alpha * o + (1.0 - alpha) * s for o, s in zip(obj, subj))
    return WeightBundle(obj, subj, alpha, blended)
