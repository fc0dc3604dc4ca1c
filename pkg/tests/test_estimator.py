"""Estimator facade: parameter protocol, fitting, prediction, ecosystem fit."""

import pytest
from sklearn.base import clone

from ffdecide import (
    Alternative,
    Criterion,
    DecisionProblem,
    DomainError,
    Expert,
    FermateanMarcosRanker,
    ShapeError,
    builtin_case,
    evaluate,
)


def test_default_params():
    ranker = FermateanMarcosRanker()
    assert ranker.get_params() == {
        "alpha": 0.5,
        "entropy": "cosine",
        "aggregator": "ffwa",
        "standard_marcos": False,
    }


def test_set_params_roundtrip():
    ranker = FermateanMarcosRanker()
    ranker.set_params(alpha=0.8, entropy="shannon")
    assert ranker.alpha == 0.8
    assert ranker.entropy == "shannon"
    with pytest.raises(ValueError, match="invalid parameter"):
        ranker.set_params(gamma=1.0)


def test_sklearn_clone_compatibility():
    ranker = FermateanMarcosRanker(alpha=0.75, entropy="linear")
    copy = clone(ranker)
    assert copy is not ranker
    assert copy.get_params() == ranker.get_params()


def test_fit_exposes_pipeline_state(turkiye):
    ranker = FermateanMarcosRanker().fit(turkiye)
    reference = evaluate(turkiye)
    assert ranker.ranking_ == reference.result.order
    assert ranker.result_.f_u == reference.result.f_u
    assert ranker.weights_.integrated == reference.weights.integrated


def test_predict_returns_aligned_ranks(turkiye):
    ranker = FermateanMarcosRanker().fit(turkiye)
    ranks = ranker.predict()
    assert sorted(ranks) == list(range(1, 8))
    best = ranker.ranking_[0]
    assert ranks[turkiye.alternative_ids.index(best)] == 1
    assert ranker.fit_predict(turkiye) == ranks


def test_predict_requires_fit(turkiye):
    with pytest.raises(DomainError, match="not fitted"):
        FermateanMarcosRanker().predict()
    with pytest.raises(DomainError, match="DecisionProblem"):
        FermateanMarcosRanker().fit([[1, 2], [3, 4]])


def test_predict_new_problem_with_fitted_weights(turkiye):
    ranker = FermateanMarcosRanker().fit(turkiye)
    # Same criteria, a reduced two-region problem judged by one expert.
    small = DecisionProblem(
        title="two regions",
        criteria=turkiye.criteria,
        alternatives=(Alternative("X", "strong"), Alternative("Y", "weak")),
        experts=(Expert("E1", "I"),),
        evaluations=(
            (
                ("L", "L", "VI", "VI", "VI", "VI"),
                ("VI", "VI", "L", "L", "L", "L"),
            ),
        ),
        criterion_importance=(("M",) * 6,),
    )
    ranks = ranker.predict(small)
    assert ranks == [1, 2]  # X dominates Y after cost normalization

    mismatched = DecisionProblem(
        title="one criterion",
        criteria=(Criterion("C1", "c", "benefit"),),
        alternatives=(Alternative("X", "x"),),
        experts=(Expert("E1", "I"),),
        evaluations=((("M",),),),
        criterion_importance=(("M",),),
    )
    with pytest.raises(ShapeError):
        ranker.predict(mismatched)


def test_param_validation_happens_at_fit(turkiye):
    ranker = FermateanMarcosRanker(alpha=1.7)
    with pytest.raises(DomainError, match="alpha"):
        ranker.fit(turkiye)
    with pytest.raises(DomainError, match="entropy"):
        FermateanMarcosRanker(entropy="gauss").fit(turkiye)


def test_repr_lists_params():
    text = repr(FermateanMarcosRanker(alpha=0.3))
    assert "FermateanMarcosRanker" in text and "alpha=0.3" in text
