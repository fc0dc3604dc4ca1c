"""Rank-stability analytics: blend-parameter sweeps, weight perturbation with
rank correlation, entropy-model comparison, and criterion dominance.

Every scenario is an independent pure evaluation; report rows are assembled
in a fixed (criterion, direction, alpha) order so repeated runs are
bit-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from . import marcos
from .entropy import ENTROPY_MODELS
from .errors import DegenerateWeightsError, DomainError, ItemMismatchError
from .ffn import WeightVector
from .pipeline import evaluate


def kendall_tau(a: Sequence[str] | Mapping[str, float], b: Sequence[str] | Mapping[str, float]) -> float:
    """Tie-corrected rank correlation (tau-b) by explicit pair enumeration.

    Arguments are either orderings (sequences, best first) or mappings from
    item to rank value (smaller = better; equal values are ties).  With no
    ties this equals the classic tau-a.
    """
    ranks_a = _as_ranks(a)
    ranks_b = _as_ranks(b)
    if set(ranks_a) != set(ranks_b):
        raise ItemMismatchError("rankings cover different item sets")
    items = sorted(ranks_a)
    n = len(items)
    if n < 2:
        raise ItemMismatchError("need at least two items to correlate rankings")
    concordant = discordant = ties_a = ties_b = 0
    for x, y in combinations(items, 2):
        da = ranks_a[x] - ranks_a[y]
        db = ranks_b[x] - ranks_b[y]
        if da == 0 and db == 0:
            ties_a += 1
            ties_b += 1
        elif da == 0:
            ties_a += 1
        elif db == 0:
            ties_b += 1
        elif (da > 0) == (db > 0):
            concordant += 1
        else:
            discordant += 1
    n0 = n * (n - 1) / 2
    denom = ((n0 - ties_a) * (n0 - ties_b)) ** 0.5
    if denom == 0.0:
        # All pairs tied on at least one side: the rankings carry no order
        # information to disagree on.
        return 1.0
    return (concordant - discordant) / denom


def _tau_or_trivial(a: Sequence[str], b: Sequence[str]) -> float:
    """Tau between two orders; a single shared item correlates trivially."""
    if len(a) == 1 and tuple(a) == tuple(b):
        return 1.0
    return kendall_tau(a, b)


def _as_ranks(ranking: Sequence[str] | Mapping[str, float]) -> dict[str, float]:
    if isinstance(ranking, Mapping):
        return {str(k): float(v) for k, v in ranking.items()}
    ranks = {}
    for i, item in enumerate(ranking):
        if item in ranks:
            raise ItemMismatchError(f"duplicate item {item!r} in ranking")
        ranks[str(item)] = float(i)
    return ranks


@dataclass(frozen=True)
class AlphaSweepRow:
    alpha: float
    f_u: tuple[float, ...]
    order: tuple[str, ...]


@dataclass(frozen=True)
class PerturbationRow:
    criterion: str
    direction: str
    weights: WeightVector
    order: tuple[str, ...]
    tau: float


@dataclass(frozen=True)
class EntropyComparison:
    orders: dict[str, tuple[str, ...]]
    integrated: dict[str, WeightVector]
    objective: dict[str, WeightVector]
    tau_matrix: dict[str, dict[str, float]]


@dataclass(frozen=True)
class RobustnessReport:
    alpha_table: tuple[AlphaSweepRow, ...]
    perturbation_table: tuple[PerturbationRow, ...]
    entropy_comparison: EntropyComparison
    dominance: dict[str, tuple[float, ...]]


DEFAULT_ALPHA_GRID = tuple(round(0.1 * i, 1) for i in range(11))


def alpha_sweep(
    problem,
    grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    entropy: str = "cosine",
    aggregator: str = "ffwa",
    standard_marcos: bool = False,
) -> tuple[AlphaSweepRow, ...]:
    """Re-rank under every blend parameter in the grid."""
    for a in grid:
        if not 0.0 <= a <= 1.0:
            raise DomainError(f"grid value {a} outside [0, 1]")
    rows = []
    for a in grid:
        outcome = evaluate(problem, alpha=a, entropy=entropy,
                           aggregator=aggregator, standard_marcos=standard_marcos)
        rows.append(AlphaSweepRow(alpha=float(a), f_u=outcome.result.f_u, order=outcome.result.order))
    return tuple(rows)


def perturb_weights(
    problem,
    weights: Sequence[float] | None = None,
    delta: float = 0.10,
    alpha: float = 0.5,
    entropy: str = "cosine",
    aggregator: str = "ffwa",
    standard_marcos: bool = False,
) -> tuple[PerturbationRow, ...]:
    """Nudge each criterion weight by +/-delta, renormalize, re-rank.

    The correlation column compares each perturbed order against the
    unperturbed one.  ``weights=None`` perturbs the problem's own integrated
    weights at the given alpha.
    """
    if not 0.0 < delta < 1.0:
        raise DomainError(f"delta must lie in (0, 1), got {delta}")
    base = evaluate(problem, alpha=alpha, entropy=entropy,
                    aggregator=aggregator, standard_marcos=standard_marcos)
    w0 = WeightVector(weights) if weights is not None else base.weights.integrated
    base_result = marcos.rank(base.aggregated, w0, standard_marcos)
    rows = []
    for j, criterion in enumerate(base.aggregated.col_ids):
        for sign, direction in ((+1.0, "+"), (-1.0, "-")):
            nudged = list(w0)
            nudged[j] = nudged[j] * (1.0 + sign * delta)
            perturbed = WeightVector.normalized(nudged)
            result = marcos.rank(base.aggregated, perturbed, standard_marcos)
            rows.append(
                PerturbationRow(
                    criterion=criterion,
                    direction=direction,
                    weights=perturbed,
                    order=result.order,
                    tau=_tau_or_trivial(base_result.order, result.order),
                )
            )
    return tuple(rows)


def compare_entropies(
    problem,
    models: Sequence[str] = ENTROPY_MODELS,
    alpha: float = 0.5,
    aggregator: str = "ffwa",
    standard_marcos: bool = False,
) -> EntropyComparison:
    """Recompute objective weights under each entropy model and re-rank."""
    orders: dict[str, tuple[str, ...]] = {}
    integrated: dict[str, WeightVector] = {}
    objective: dict[str, WeightVector] = {}
    for model in models:
        outcome = evaluate(problem, alpha=alpha, entropy=model,
                           aggregator=aggregator, standard_marcos=standard_marcos)
        orders[model] = outcome.result.order
        integrated[model] = outcome.weights.integrated
        objective[model] = outcome.weights.objective
    tau_matrix = {
        m1: {m2: _tau_or_trivial(orders[m1], orders[m2]) for m2 in models} for m1 in models
    }
    return EntropyComparison(orders, integrated, objective, tau_matrix)


def dominance(weights_per_model: Mapping[str, Sequence[float]]) -> dict[str, tuple[float, ...]]:
    """Each weight divided by its model's maximum weight; the max scores 1."""
    if not weights_per_model:
        raise DegenerateWeightsError("no weight vectors given")
    out = {}
    for model, weights in weights_per_model.items():
        values = [float(w) for w in weights]
        top = max(values) if values else 0.0
        if top <= 0.0:
            raise DegenerateWeightsError(f"model {model!r} has no positive weight")
        out[model] = tuple(w / top for w in values)
    return out


def robustness_report(
    problem,
    alpha: float = 0.5,
    delta: float = 0.10,
    grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    aggregator: str = "ffwa",
    standard_marcos: bool = False,
) -> RobustnessReport:
    """Assemble the full stability report for one problem."""
    comparison = compare_entropies(problem, alpha=alpha, aggregator=aggregator,
                                   standard_marcos=standard_marcos)
    return RobustnessReport(
        alpha_table=alpha_sweep(problem, grid, aggregator=aggregator,
                                standard_marcos=standard_marcos),
        perturbation_table=perturb_weights(problem, delta=delta, alpha=alpha,
                                           aggregator=aggregator, standard_marcos=standard_marcos),
        entropy_comparison=comparison,
        dominance=dominance(comparison.integrated),
    )
