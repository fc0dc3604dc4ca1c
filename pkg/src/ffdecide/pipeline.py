"""End-to-end evaluation: expert weighting, aggregation, entropy and
stepwise weighting, weight blending, and compromise ranking.

This module is the single composition point used by the estimator, the CLI,
the HTTP service, and the robustness analytics, so every surface produces
identical numbers for identical inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import marcos
from .entropy import ENTROPY_MODELS, CriterionEntropies, criterion_entropies, objective_weights
from .errors import DomainError, ShapeError
from .ffn import FFN, ffwa, ffwg
from .marcos import FFMatrix, MarcosResult
from .piprecia import (
    ExpertPanel,
    PipreciaTrace,
    WeightBundle,
    crisp_significance,
    expert_weights,
    integrate_weights,
    piprecia_chain,
)
from .problem import DecisionProblem

AGGREGATORS = ("ffwa", "ffwg")


@dataclass(frozen=True)
class EvaluationOutcome:
    """Everything computed in one pipeline run, intermediates included."""

    problem: DecisionProblem
    panel: ExpertPanel
    aggregated: FFMatrix
    importance: tuple[FFN, ...]
    entropies: CriterionEntropies
    trace: PipreciaTrace
    weights: WeightBundle
    normalized: FFMatrix
    weighted: FFMatrix
    pis: tuple[FFN, ...]
    nis: tuple[FFN, ...]
    result: MarcosResult

    @property
    def ranking(self) -> tuple[str, ...]:
        return self.result.order


def _aggregator(name: str):
    if name == "ffwa":
        return ffwa
    if name == "ffwg":
        return ffwg
    raise DomainError(f"unknown aggregator {name!r}; expected one of {AGGREGATORS}")


def aggregate_matrix(problem: DecisionProblem, panel: ExpertPanel, aggregator: str = "ffwa") -> FFMatrix:
    """Collapse the expert dimension of the evaluation tensor."""
    agg = _aggregator(aggregator)
    if len(panel.weights) != len(problem.experts):
        raise ShapeError(f"{len(panel.weights)} panel weights vs {len(problem.experts)} experts")
    cells = tuple(
        tuple(
            agg(
                [problem.scale[problem.evaluations[e][a][c]] for e in range(len(problem.experts))],
                panel.weights,
            )
            for c in range(len(problem.criteria))
        )
        for a in range(len(problem.alternatives))
    )
    return FFMatrix(
        row_ids=problem.alternative_ids,
        col_ids=problem.criterion_ids,
        cells=cells,
        orientations=problem.orientations,
    )


def aggregate_importance(problem: DecisionProblem, panel: ExpertPanel, aggregator: str = "ffwa") -> tuple[FFN, ...]:
    """Collapse the expert dimension of the criterion-importance gradings."""
    agg = _aggregator(aggregator)
    return tuple(
        agg(
            [problem.scale[problem.criterion_importance[e][c]] for e in range(len(problem.experts))],
            panel.weights,
        )
        for c in range(len(problem.criteria))
    )


def evaluate(
    problem: DecisionProblem,
    alpha: float = 0.5,
    entropy: str = "cosine",
    aggregator: str = "ffwa",
    standard_marcos: bool = False,
) -> EvaluationOutcome:
    """Run the whole pipeline on a decision problem."""
    if entropy not in ENTROPY_MODELS:
        raise DomainError(f"unknown entropy model {entropy!r}; expected one of {ENTROPY_MODELS}")
    if aggregator not in AGGREGATORS:
        raise DomainError(f"unknown aggregator {aggregator!r}; expected one of {AGGREGATORS}")
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")

    panel = expert_weights(
        [e.grade for e in problem.experts], problem.scale, [e.id for e in problem.experts]
    )
    aggregated = aggregate_matrix(problem, panel, aggregator)
    entropies = criterion_entropies(aggregated.cells, model=entropy)
    objective = objective_weights(entropies)

    importance = aggregate_importance(problem, panel, aggregator)
    trace = piprecia_chain(crisp_significance(importance))
    bundle = integrate_weights(objective, trace.subjective, alpha)

    normalized = marcos.normalize(aggregated)
    pis, nis = marcos.ideal_solutions(normalized)
    weighted = marcos.weight_matrix(normalized, bundle.integrated)
    s, s_pis, s_nis = marcos.weighted_scores(weighted, pis, nis, bundle.integrated)
    result = marcos.utilities(s, s_pis, s_nis, problem.alternative_ids, standard_marcos)

    return EvaluationOutcome(
        problem=problem,
        panel=panel,
        aggregated=aggregated,
        importance=importance,
        entropies=entropies,
        trace=trace,
        weights=bundle,
        normalized=normalized,
        weighted=weighted,
        pis=pis,
        nis=nis,
        result=result,
    )
