"""Seeded verification campaigns and their JSON reports.

A campaign draws ``trials`` instances from a generator template (instance
``i`` uses seed ``base + i``), keeps those meeting the theorem's hypothesis,
and checks the conclusion on each.  Results are merged in seed order, so the
report does not depend on the number of worker processes.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .detectors import SearchBudget
from .errors import BadParams
from .generators import GenSpec, generate
from .graph import serialize_ecg
from .theorems import Outcome, check_conclusion, check_hypothesis, get_theorem, min_delta

__all__ = [
    "REPORT_SCHEMA",
    "Violation",
    "TheoremReport",
    "evaluate_instance",
    "run_campaign",
    "default_template",
    "dumps_report",
]

REPORT_SCHEMA = "rainbow-report/1"


@dataclass(frozen=True)
class Violation:
    seed: int
    ecg: str
    note: str

    def as_dict(self) -> dict:
        return {"seed": self.seed, "ecg": self.ecg, "note": self.note}


@dataclass
class TheoremReport:
    theorem: str
    params: dict
    generator: dict
    trials: int
    budget: int | None
    base_seed: int
    hypothesis_met: int = 0
    verified: int = 0
    indeterminate: int = 0
    violations: list = field(default_factory=list)
    # hypothesis unmet, including unmet side conditions
    skipped: int = 0
    timing_ms: int | None = None

    def as_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "theorem": self.theorem,
            "params": dict(self.params),
            "generator": dict(self.generator),
            "trials": self.trials,
            "counts": {
                "hypothesis_met": self.hypothesis_met,
                "verified": self.verified,
                "indeterminate": self.indeterminate,
                "violations": len(self.violations),
            },
            "violations": [v.as_dict() for v in self.violations],
            "budget": self.budget,
            "seeds": {"base": self.base_seed},
            "timing_ms": self.timing_ms,
        }

    def to_json(self) -> str:
        return dumps_report(self.as_dict())

    @property
    def balanced(self) -> bool:
        return self.hypothesis_met == self.verified + self.indeterminate + len(self.violations)


def dumps_report(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _node_limit(budget):
    if isinstance(budget, SearchBudget):
        return budget.node_limit
    return budget


def evaluate_instance(theorem, params, spec: GenSpec, budget):
    """Generate one instance and classify it.

    Returns ``(seed, status, ecg, note)`` with status one of ``"skipped"`` or an
    :class:`Outcome` value; ``ecg`` is filled only for violations.
    """
    G = generate(spec)
    if not check_hypothesis(G, theorem, params):
        return spec.seed, "skipped", None, ""
    res = check_conclusion(G, theorem, params, budget)
    if res.status is Outcome.VIOLATED:
        return spec.seed, res.status.value, serialize_ecg(G), res.note
    return spec.seed, res.status.value, None, ""


def _evaluate_packed(args):
    return evaluate_instance(*args)


def run_campaign(
    theorem,
    params,
    gen: GenSpec,
    trials: int,
    budget=None,
    *,
    jobs: int = 1,
    timing: bool = False,
) -> TheoremReport:
    """Run ``trials`` seeded instances of ``gen`` against ``theorem``.

    The template's seed is the base seed.  ``timing`` records wall time in the
    report, which makes otherwise identical reports differ byte-wise.
    """
    if trials < 1:
        raise BadParams("trials must be at least 1")
    th = get_theorem(theorem)
    start = time.perf_counter()
    report = TheoremReport(
        theorem=th.id.value,
        params={k: int(v) for k, v in sorted((params or {}).items()) if v is not None},
        generator={k: v for k, v in gen.as_dict().items() if k != "seed"},
        trials=trials,
        budget=_node_limit(budget),
        base_seed=gen.seed,
    )
    work = [(th.id.value, params, gen.with_seed(gen.seed + i), budget) for i in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate_packed, work, chunksize=max(1, trials // (4 * jobs))))
    else:
        results = [_evaluate_packed(w) for w in work]
    for seed, status, ecg, note in results:
        if status == "skipped":
            report.skipped += 1
            continue
        report.hypothesis_met += 1
        if status == Outcome.VERIFIED.value:
            report.verified += 1
        elif status == Outcome.INDETERMINATE.value:
            report.indeterminate += 1
        else:
            report.violations.append(Violation(seed, ecg, note))
    if timing:
        report.timing_ms = int(round((time.perf_counter() - start) * 1000))
    return report


def default_template(theorem, n: int, params=None, seed: int = 0) -> GenSpec:
    """Targeted complete-graph generator tuned to just clear the hypothesis."""
    t = max(1, min(n - 1, min_delta(theorem, n, params)))
    return GenSpec("targeted_delta", n=n, target_delta=t, seed=seed)
