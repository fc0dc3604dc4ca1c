"""Regenerate tests/golden_turkiye.json from the current engine.

Run only after an intentional numerical change, then review the diff:

    python tools/regen_golden.py
"""

import hashlib
import json
from pathlib import Path

import ffdecide as fd
from ffdecide import robustness
from ffdecide.documents import save_problem

PUBLISHED_ORDER = ["R1", "R2", "R4", "R7", "R3", "R6", "R5"]


def build() -> dict:
    problem = fd.builtin_case("turkiye-energy-poverty")
    out = fd.evaluate(problem, alpha=0.5)
    lin = fd.evaluate(problem, alpha=0.5, entropy="linear")
    shan = fd.evaluate(problem, alpha=0.5, entropy="shannon")
    sweep = robustness.alpha_sweep(problem)
    perturb = robustness.perturb_weights(problem)
    comparison = robustness.compare_entropies(problem)
    dom = robustness.dominance(comparison.integrated)
    return {
        "case_sha256": hashlib.sha256(save_problem(problem).encode()).hexdigest(),
        "expert_weights": list(out.panel.weights),
        "aggregated": [[[c.mu, c.nu] for c in row] for row in out.aggregated.cells],
        "entropies_cosine": list(out.entropies.values),
        "entropies_shannon": list(shan.entropies.values),
        "entropies_linear": list(lin.entropies.values),
        "objective": list(out.weights.objective),
        "subjective": list(out.weights.subjective),
        "integrated": list(out.weights.integrated),
        "crisp_significance": list(out.trace.crisp),
        "pis": [[f.mu, f.nu] for f in out.pis],
        "nis": [[f.mu, f.nu] for f in out.nis],
        "s": list(out.result.s),
        "s_pis": out.result.s_pis,
        "s_nis": out.result.s_nis,
        "u_minus": list(out.result.u_minus),
        "u_plus": list(out.result.u_plus),
        "f_u": list(out.result.f_u),
        "order": list(out.result.order),
        "tau_vs_published": robustness.kendall_tau(out.result.order, PUBLISHED_ORDER),
        "alpha_sweep": [
            {"alpha": r.alpha, "order": list(r.order), "f_u": list(r.f_u)} for r in sweep
        ],
        "perturbation": [
            {"criterion": r.criterion, "direction": r.direction, "tau": r.tau,
             "order": list(r.order)}
            for r in perturb
        ],
        "entropy_orders": {m: list(o) for m, o in comparison.orders.items()},
        "entropy_tau_matrix": {m1: dict(row) for m1, row in comparison.tau_matrix.items()},
        "dominance": {m: list(v) for m, v in dom.items()},
    }


if __name__ == "__main__":
    target = Path(__file__).resolve().parent.parent / "tests" / "golden_turkiye.json"
    target.write_text(json.dumps(build(), indent=2) + "\n")
    print(f"wrote {target}")
