"""Command-line interface.

Subcommands: evaluate, weights, sweep, perturb, compare-entropy, dominance,
example, serve.  Exit codes: 0 success, 2 validation error, 3 degenerate
computation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import reporting, robustness
from .documents import load_problem, save_problem
from .errors import DegenerateComputationError, DomainError, ValidationFailure
from .pipeline import AGGREGATORS, evaluate
from .entropy import ENTROPY_MODELS
from .problem import builtin_case, case_names

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DEGENERATE = 3


def _add_problem_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="PATH", help="problem document to load")
    source.add_argument("--case", metavar="NAME", help="built-in case name")


def _add_pipeline_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, default=0.5,
                        help="objective/subjective blend in [0, 1] (default 0.5)")
    parser.add_argument("--entropy", choices=ENTROPY_MODELS, default="cosine")
    parser.add_argument("--aggregator", choices=AGGREGATORS, default="ffwa")
    parser.add_argument("--standard-marcos", action="store_true",
                        help="flip the utility-degree association of the reference sums")


def _load(args: argparse.Namespace):
    if args.case is not None:
        return builtin_case(args.case)
    return load_problem(Path(args.input).read_bytes())


def _pipeline_kwargs(args: argparse.Namespace) -> dict:
    return {
        "alpha": args.alpha,
        "entropy": args.entropy,
        "aggregator": args.aggregator,
        "standard_marcos": args.standard_marcos,
    }


def _emit(data: bytes) -> None:
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()


def _parse_grid(text: str) -> list[float]:
    """Parse 'start:stop:step' into an inclusive grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise DomainError(f"grid values must be numbers, got {text!r}") from None
    if step <= 0 or stop < start:
        raise DomainError(f"grid needs step > 0 and stop >= start, got {text!r}")
    grid = []
    k = 0
    while True:
        value = round(start + k * step, 12)
        if value > stop + 1e-12:
            break
        grid.append(min(value, stop))
        k += 1
    return grid


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_evaluate(args) -> int:
    outcome = evaluate(_load(args), **_pipeline_kwargs(args))
    if args.format == "structured":
        _emit(reporting.render_structured(reporting.outcome_to_document(outcome, include_intermediate=True)))
    else:
        report = reporting.build_report(outcome)
        _emit(reporting.render_table(report) if args.format == "table" else reporting.render_csv(report))
    return EXIT_OK


def _cmd_weights(args) -> int:
    outcome = evaluate(_load(args), **_pipeline_kwargs(args))
    _emit(reporting.render_structured(reporting.weights_payload(outcome)))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    problem = _load(args)
    grid = _parse_grid(args.alpha_grid)
    rows = robustness.alpha_sweep(problem, grid, entropy=args.entropy,
                                  aggregator=args.aggregator, standard_marcos=args.standard_marcos)
    _emit(reporting.render_structured(
        reporting.sweep_to_document(rows, problem.alternative_ids)))
    return EXIT_OK


def _cmd_perturb(args) -> int:
    problem = _load(args)
    base = evaluate(problem, **_pipeline_kwargs(args))
    rows = robustness.perturb_weights(problem, delta=args.delta, **_pipeline_kwargs(args))
    _emit(reporting.render_structured(
        reporting.perturbation_to_document(rows, base.result.order, args.delta)))
    return EXIT_OK


def _cmd_compare_entropy(args) -> int:
    comparison = robustness.compare_entropies(
        _load(args), alpha=args.alpha, aggregator=args.aggregator,
        standard_marcos=args.standard_marcos)
    _emit(reporting.render_structured(reporting.comparison_to_document(comparison)))
    return EXIT_OK


def _cmd_dominance(args) -> int:
    problem = _load(args)
    comparison = robustness.compare_entropies(
        problem, alpha=args.alpha, aggregator=args.aggregator,
        standard_marcos=args.standard_marcos)
    dom = robustness.dominance(comparison.integrated)
    _emit(reporting.render_structured(
        reporting.dominance_to_document(dom, problem.criterion_ids)))
    return EXIT_OK


def _cmd_example(args) -> int:
    problem = builtin_case(args.name)
    _emit(save_problem(problem).encode("utf-8"))
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .service import serve

    serve(port=args.port, bind=args.bind, allowed_origins=tuple(args.allow_origin))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffdecide",
        description="Fermatean fuzzy decision engine: entropy + stepwise weighting + compromise ranking",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="run the full pipeline and print a report")
    _add_problem_source(p)
    _add_pipeline_options(p)
    p.add_argument("--format", choices=("table", "csv", "structured"), default="table")
    p.set_defaults(handler=_cmd_evaluate)

    p = sub.add_parser("weights", help="emit the weight bundle only")
    _add_problem_source(p)
    _add_pipeline_options(p)
    p.set_defaults(handler=_cmd_weights)

    p = sub.add_parser("sweep", help="re-rank across a grid of blend parameters")
    _add_problem_source(p)
    _add_pipeline_options(p)
    p.add_argument("--alpha-grid", default="0:1:0.1", metavar="START:STOP:STEP")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("perturb", help="perturb each criterion weight and report rank correlation")
    _add_problem_source(p)
    _add_pipeline_options(p)
    p.add_argument("--delta", type=float, default=0.10)
    p.set_defaults(handler=_cmd_perturb)

    p = sub.add_parser("compare-entropy", help="rankings under each entropy model plus tau matrix")
    _add_problem_source(p)
    _add_pipeline_options(p)
    p.set_defaults(handler=_cmd_compare_entropy)

    p = sub.add_parser("dominance", help="criterion dominance per entropy model")
    _add_problem_source(p)
    _add_pipeline_options(p)
    p.set_defaults(handler=_cmd_dominance)

    p = sub.add_parser("example", help="print a built-in case document")
    p.add_argument("--name", default="turkiye-energy-poverty",
                   help=f"one of: {', '.join(case_names())}")
    p.set_defaults(handler=_cmd_example)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8645)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--allow-origin", action="append", default=[],
                   help="CORS origin to allow (repeatable)")
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DegenerateComputationError as exc:
        print(f"degenerate computation: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
