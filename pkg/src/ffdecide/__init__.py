"""Fermatean fuzzy decision engine.

Rank alternatives evaluated through linguistic expert judgments: cosine
entropy for objective criterion weights, a stepwise comparison chain for
subjective weights, an alpha blend of the two, and compromise ranking against
ideal and anti-ideal references, plus rank-stability analytics.
"""

from .entropy import (
    ENTROPY_MODELS,
    CriterionEntropies,
    criterion_entropies,
    entropy_cosine,
    entropy_linear,
    entropy_shannon,
    objective_weights,
)
from .errors import (
    CubeSumError,
    DegenerateComputationError,
    DegenerateReferenceError,
    DegenerateWeightsError,
    DomainError,
    EmptyInputError,
    FFDecideError,
    ItemMismatchError,
    LengthMismatchError,
    ParseError,
    SchemaError,
    ShapeError,
    UnknownCaseError,
    UnknownTermError,
    ValidationError,
    ValidationFailure,
)
from .estimator import FermateanMarcosRanker
from .ffn import (
    DEFAULT_SCALE,
    FFN,
    LinguisticScale,
    ScoreTriple,
    WeightVector,
    complement,
    ffn_add,
    ffn_mul,
    ffwa,
    ffwg,
    from_linguistic,
    hesitation,
    join,
    lattice,
    make_ffn,
    meet,
    power,
    scale,
)
from .marcos import (
    FFMatrix,
    MarcosResult,
    ideal_solutions,
    normalize,
    rank,
    utilities,
    weight_matrix,
    weighted_scores,
)
from .pipeline import AGGREGATORS, EvaluationOutcome, evaluate
from .piprecia import (
    ExpertPanel,
    PipreciaTrace,
    WeightBundle,
    crisp_significance,
    expert_weights,
    integrate_weights,
    piprecia_chain,
)
from .problem import (
    Alternative,
    Criterion,
    DecisionProblem,
    Expert,
    builtin_case,
    case_names,
)
from .documents import load_problem, problem_to_document, save_problem
from .reporting import ReportDocument, build_report, render_report
from .robustness import (
    RobustnessReport,
    alpha_sweep,
    compare_entropies,
    dominance,
    kendall_tau,
    perturb_weights,
    robustness_report,
)

__version__ = "0.1.0"

__all__ = [
    "AGGREGATORS",
    "Alternative",
    "Criterion",
    "CriterionEntropies",
    "CubeSumError",
    "DEFAULT_SCALE",
    "DecisionProblem",
    "DegenerateComputationError",
    "DegenerateReferenceError",
    "DegenerateWeightsError",
    "DomainError",
    "EmptyInputError",
    "ENTROPY_MODELS",
    "EvaluationOutcome",
    "Expert",
    "ExpertPanel",
    "FFDecideError",
    "FFMatrix",
    "FFN",
    "FermateanMarcosRanker",
    "ItemMismatchError",
    "LengthMismatchError",
    "LinguisticScale",
    "MarcosResult",
    "ParseError",
    "PipreciaTrace",
    "ReportDocument",
    "RobustnessReport",
    "SchemaError",
    "ScoreTriple",
    "ShapeError",
    "UnknownCaseError",
    "UnknownTermError",
    "ValidationError",
    "ValidationFailure",
    "WeightBundle",
    "WeightVector",
    "alpha_sweep",
    "build_report",
    "builtin_case",
    "case_names",
    "compare_entropies",
    "complement",
    "crisp_significance",
    "criterion_entropies",
    "dominance",
    "entropy_cosine",
    "entropy_linear",
    "entropy_shannon",
    "evaluate",
    "expert_weights",
    "ffn_add",
    "ffn_mul",
    "ffwa",
    "ffwg",
    "from_linguistic",
    "hesitation",
    "ideal_solutions",
    "integrate_weights",
    "join",
    "kendall_tau",
    "lattice",
    "load_problem",
    "make_ffn",
    "meet",
    "normalize",
    "objective_weights",
    "perturb_weights",
    "piprecia_chain",
    "power",
    "problem_to_document",
    "rank",
    "render_report",
    "robustness_report",
    "save_problem",
    "scale",
    "utilities",
    "weight_matrix",
    "weighted_scores",
]
