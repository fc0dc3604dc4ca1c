"""Estimator-style facade over the evaluation pipeline.

``FermateanMarcosRanker`` follows the scikit-learn parameter protocol
(keyword-only constructor params, ``get_params``/``set_params``, fitted
attributes with trailing underscores) so it composes with ecosystem tooling
such as ``sklearn.base.clone`` without this package depending on scikit-learn.

``fit`` derives criterion weights from a problem's evaluations and importance
gradings; ``predict`` ranks a problem with those fitted weights.
"""

from __future__ import annotations

from . import marcos
from .errors import DomainError, ShapeError
from .pipeline import AGGREGATORS, EvaluationOutcome, aggregate_matrix, evaluate
from .piprecia import expert_weights
from .problem import DecisionProblem


class FermateanMarcosRanker:
    """Rank alternatives of a linguistic decision problem.

    Parameters
    ----------
    alpha : float, default=0.5
        Blend between entropy-derived objective weights (alpha=1) and
        stepwise subjective weights (alpha=0).
    entropy : {"cosine", "shannon", "linear"}, default="cosine"
        Per-element fuzziness measure behind the objective weights.
    aggregator : {"ffwa", "ffwg"}, default="ffwa"
        Operator collapsing the expert dimension.
    standard_marcos : bool, default=False
        Flip the utility-degree association of the ideal/anti-ideal sums.

    Attributes
    ----------
    outcome_ : EvaluationOutcome
        Full pipeline output for the fitted problem.
    weights_ : WeightBundle
        Objective, subjective and integrated criterion weights.
    result_ : MarcosResult
        Score sums, utilities and the induced order.
    ranking_ : tuple[str, ...]
        Alternative ids, best first.
    """

    def __init__(self, alpha=0.5, entropy="cosine", aggregator="ffwa", standard_marcos=False):
        self.alpha = alpha
        self.entropy = entropy
        self.aggregator = aggregator
        self.standard_marcos = standard_marcos

    # -- scikit-learn parameter protocol ---------------------------------

    def get_params(self, deep=True):
        return {
            "alpha": self.alpha,
            "entropy": self.entropy,
            "aggregator": self.aggregator,
            "standard_marcos": self.standard_marcos,
        }

    def set_params(self, **params):
        valid = self.get_params()
        for key, value in params.items():
            if key not in valid:
                raise ValueError(
                    f"invalid parameter {key!r} for {type(self).__name__}; "
                    f"valid parameters: {sorted(valid)}"
                )
            setattr(self, key, value)
        return self

    def __repr__(self):
        params = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({params})"

    # -- estimator API -----------------------------------------------------

    def fit(self, problem: DecisionProblem, y=None):
        """Run the pipeline on ``problem`` and keep all fitted state."""
        if not isinstance(problem, DecisionProblem):
            raise DomainError(f"fit expects a DecisionProblem, got {type(problem).__name__}")
        outcome: EvaluationOutcome = evaluate(
            problem,
            alpha=self.alpha,
            entropy=self.entropy,
            aggregator=self.aggregator,
            standard_marcos=self.standard_marcos,
        )
        self.outcome_ = outcome
        self.weights_ = outcome.weights
        self.result_ = outcome.result
        self.ranking_ = outcome.result.order
        return self

    def _check_fitted(self):
        if not hasattr(self, "outcome_"):
            raise DomainError("this ranker is not fitted yet; call fit(problem) first")

    def predict(self, problem: DecisionProblem | None = None):
        """1-based rank per alternative, aligned with the problem's order.

        With ``problem=None`` the fitted problem's ranks are returned;
        otherwise the new problem is aggregated with its own expert panel and
        ranked under the fitted integrated weights (criterion counts must
        match).
        """
        self._check_fitted()
        if problem is None:
            result = self.result_
        else:
            if len(problem.criteria) != len(self.outcome_.problem.criteria):
                raise ShapeError(
                    f"problem has {len(problem.criteria)} criteria; "
                    f"fitted weights cover {len(self.outcome_.problem.criteria)}"
                )
            panel = expert_weights(
                [e.grade for e in problem.experts], problem.scale, [e.id for e in problem.experts]
            )
            matrix = aggregate_matrix(problem, panel, self.aggregator)
            result = marcos.rank(matrix, self.weights_.integrated, self.standard_marcos)
        return [result.rank_of(a) for a in result.alternatives]

    def fit_predict(self, problem: DecisionProblem, y=None):
        return self.fit(problem).predict()


__all__ = ["FermateanMarcosRanker", "AGGREGATORS"]
