"""Counterexample and tightness mining.

Exhaustive mode walks every coloring (up to color renaming) of every labeled
graph of each order, skipping branches that cannot meet the color-degree
threshold and branches whose partial graph already satisfies the conclusion.
Both cuts are sound because every conclusion in the catalog is monotone under
adding colored edges.  Random mode samples the generator families instead.

A tightness probe looks, per order, for the largest minimum color degree of
a graph meeting the side conditions on which the conclusion is certified to
fail.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .campaign import Violation, _node_limit, dumps_report
from .colordeg import min_color_degree
from .errors import BadParams, SpaceTooLarge
from .detectors import search_rainbow_cycle
from .generators import GenSpec, Rng, enumerate_colorings, generate, lexical_coloring
from .graph import EdgeColoredGraph, serialize_ecg
from .theorems import (
    Outcome,
    TheoremId,
    check_conclusion,
    check_hypothesis,
    get_theorem,
    min_delta,
)

__all__ = [
    "MINE_SCHEMA",
    "MiningReport",
    "mine_counterexamples",
    "tightness_probe",
    "cycle_free_instance",
    "EXHAUSTIVE_MAX_N",
    "EXHAUSTIVE_MAX_PALETTE",
]

MINE_SCHEMA = "rainbow-mine/1"
EXHAUSTIVE_MAX_N = 6
EXHAUSTIVE_MAX_PALETTE = 4

_COMPLETE_ONLY = {TheoremId.RT_COMPLETE_VERTEX, TheoremId.MAIN_COMPLETE}


@dataclass
class MiningReport:
    theorem: str
    params: dict
    mode: str
    n_range: tuple
    palette_max: int
    samples: int | None
    budget: int | None
    base_seed: int
    examined: int = 0
    # subtrees cut because their partial graph already met the conclusion
    pruned: int = 0
    hypothesis_met: int = 0
    verified: int = 0
    indeterminate: int = 0
    violations: list = field(default_factory=list)
    tightness: list = field(default_factory=list)
    timing_ms: int | None = None

    def as_dict(self) -> dict:
        return {
            "schema": MINE_SCHEMA,
            "theorem": self.theorem,
            "params": dict(self.params),
            "mode": self.mode,
            "n_range": list(self.n_range),
            "palette_max": self.palette_max,
            "samples": self.samples,
            "counts": {
                "examined": self.examined,
                "pruned": self.pruned,
                "hypothesis_met": self.hypothesis_met,
                "verified": self.verified,
                "indeterminate": self.indeterminate,
                "violations": len(self.violations),
            },
            "violations": [dict(v.as_dict(), n=n) for n, v in self.violations],
            "tightness": list(self.tightness),
            "budget": self.budget,
            "seeds": {"base": self.base_seed},
            "timing_ms": self.timing_ms,
        }

    def to_json(self) -> str:
        return dumps_report(self.as_dict())


def _conclusion_prune(theorem, params, n, budget, counter=None):
    def prune(assigned) -> bool:
        partial = EdgeColoredGraph(n, assigned)
        if partial.m == 0:
            return False
        cut = check_conclusion(partial, theorem, params, budget).status is Outcome.VERIFIED
        if cut and counter is not None:
            counter[0] += 1
        return cut
    return prune


def _classify(G, theorem, params, budget):
    if not check_hypothesis(G, theorem, params):
        return "skipped", ""
    res = check_conclusion(G, theorem, params, budget)
    return res.status.value, res.note


def tightness_probe(theorem, params, n: int, palette: int, budget=None):
    """Largest minimum color degree among ``n``-vertex colorings (palette at
    most ``palette``, side conditions met) whose conclusion is certified to
    fail.  Returns ``(delta, graph)`` or ``(None, None)``; exhaustive."""
    th = get_theorem(theorem)
    P = {name: (params or {}).get(name) for name in th.required}
    complete = th.id in _COMPLETE_ONLY
    prune = _conclusion_prune(theorem, params, n, budget)
    for t in range(n - 1, -1, -1):
        for G in enumerate_colorings(n, palette, complete=complete, min_color_degree=t, prune=prune):
            if not th.side(G, P):
                continue
            if check_conclusion(G, theorem, params, budget).status is Outcome.VIOLATED:
                return min_color_degree(G), G
    return None, None


def _random_spec(theorem, params, n, palette_max, seed) -> GenSpec:
    rng = Rng(seed)
    pick = rng.below(3)
    palette = 1 + rng.below(palette_max)
    complete = get_theorem(theorem).id in _COMPLETE_ONLY
    if pick == 1 and not complete:
        return GenSpec("gnp_random", n=n, p=0.5 + rng.below(6) / 10, palette=palette, seed=seed)
    if pick == 2:
        t = min(n - 1, max(1, min_delta(theorem, n, params)))
        if n >= 2:
            return GenSpec("targeted_delta", n=n, target_delta=t, seed=seed)
    return GenSpec("complete_random", n=n, palette=palette, seed=seed)


def _random_one(args):
    theorem, params, n, palette_max, seed, budget = args
    spec = _random_spec(theorem, params, n, palette_max, seed)
    G = generate(spec)
    status, note = _classify(G, theorem, params, budget)
    failed_side = None
    if status == "skipped":
        th = get_theorem(theorem)
        P = {name: (params or {}).get(name) for name in th.required}
        if th.side(G, P) and check_conclusion(G, theorem, params, budget).status is Outcome.VIOLATED:
            failed_side = min_color_degree(G)
    elif status == Outcome.VIOLATED.value:
        failed_side = min_color_degree(G)
    ecg = serialize_ecg(G) if status == Outcome.VIOLATED.value else None
    note = f"{note}; generator {spec.as_dict()}" if ecg else note
    return n, seed, status, ecg, note, failed_side


def mine_counterexamples(
    theorem,
    params,
    n_range,
    palette_max: int,
    mode: str = "exhaustive",
    budget=None,
    *,
    samples: int = 1000,
    seed: int = 0,
    jobs: int = 1,
    tightness: bool = True,
    timing: bool = False,
) -> MiningReport:
    """Hunt for instances meeting the hypothesis whose conclusion is
    certified to fail.

    ``n_range`` is an inclusive ``(lo, hi)`` pair.  Exhaustive mode is limited
    to ``n <= 6`` and ``palette_max <= 4``; random mode draws ``samples``
    instances per order with seeds ``seed, seed+1, ...``.
    """
    th = get_theorem(theorem)
    lo, hi = n_range
    if lo > hi or lo < 1 or palette_max < 1:
        raise BadParams("need 1 <= n_lo <= n_hi and palette_max >= 1")
    if mode not in ("exhaustive", "random"):
        raise BadParams(f"unknown mode {mode!r}")
    if mode == "exhaustive" and (hi > EXHAUSTIVE_MAX_N or palette_max > EXHAUSTIVE_MAX_PALETTE):
        raise SpaceTooLarge(
            f"exhaustive mining is limited to n <= {EXHAUSTIVE_MAX_N} and palette <= {EXHAUSTIVE_MAX_PALETTE}"
        )
    start = time.perf_counter()
    report = MiningReport(
        theorem=th.id.value,
        params={k: int(v) for k, v in sorted((params or {}).items()) if v is not None},
        mode=mode,
        n_range=(lo, hi),
        palette_max=palette_max,
        samples=samples if mode == "random" else None,
        budget=_node_limit(budget),
        base_seed=seed,
    )

    def tally(n, status, ecg, note, seed_=None):
        report.examined += 1
        if status == "skipped":
            return
        report.hypothesis_met += 1
        if status == Outcome.VERIFIED.value:
            report.verified += 1
        elif status == Outcome.INDETERMINATE.value:
            report.indeterminate += 1
        else:
            report.violations.append((n, Violation(seed_, ecg, note)))

    if mode == "exhaustive":
        for n in range(lo, hi + 1):
            floor = min_delta(theorem, n, params)
            if floor >= n:
                report.tightness.append(_tight_entry(theorem, params, n, palette_max, budget, tightness))
                continue
            complete = th.id in _COMPLETE_ONLY
            cuts = [0]
            prune = _conclusion_prune(theorem, params, n, budget, cuts)
            for G in enumerate_colorings(n, palette_max, complete=complete, min_color_degree=floor, prune=prune):
                status, note = _classify(G, theorem, params, budget)
                ecg = serialize_ecg(G) if status == Outcome.VIOLATED.value else None
                tally(n, status, ecg, note)
            report.pruned += cuts[0]
            report.tightness.append(_tight_entry(theorem, params, n, palette_max, budget, tightness))
    else:
        work = [
            (th.id.value, params, n, palette_max, seed + i, budget)
            for n in range(lo, hi + 1)
            for i in range(samples)
        ]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_random_one, work, chunksize=max(1, len(work) // (4 * jobs))))
        else:
            results = [_random_one(w) for w in work]
        worst = {}
        for n, s, status, ecg, note, failed_delta in results:
            tally(n, status, ecg, note, s)
            if failed_delta is not None:
                worst[n] = max(worst.get(n, -1), failed_delta)
        if tightness:
            report.tightness = [
                {"n": n, "max_delta_with_failure": worst.get(n)} for n in range(lo, hi + 1)
            ]
    if timing:
        report.timing_ms = int(round((time.perf_counter() - start) * 1000))
    return report


def _tight_entry(theorem, params, n, palette, budget, enabled):
    if not enabled:
        return {"n": n, "max_delta_with_failure": None}
    delta, _ = tightness_probe(theorem, params, n, palette, budget)
    return {"n": n, "max_delta_with_failure": delta}


def cycle_free_instance(n: int, k: int, seed: int, steps: int = 80, budget=None):
    """A complete ``n``-vertex coloring certified free of rainbow cycles of
    length ``>= k``, or ``None`` if certification ran out of budget.

    Starts from a lexical coloring (no rainbow cycle at all) and applies
    ``steps`` random single-edge recolorings, keeping each only when the
    exhaustive cycle search still certifies absence.
    """
    rng = Rng(seed)
    palette = (max(1, n // 2), n, 2 * n)[rng.below(3)]
    G = lexical_coloring(n, palette, seed)
    cm = [list(row) for row in G.matrix]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    walk = Rng(seed * 7 + 1)
    for _ in range(steps):
        u, v = walk.choice(pairs)
        old = cm[u][v]
        cm[u][v] = cm[v][u] = walk.below(2 * n)
        trial = EdgeColoredGraph(n, [(a, b, cm[a][b]) for a, b in pairs])
        res, _ = search_rainbow_cycle(trial, k, budget)
        if res is not None:
            cm[u][v] = cm[v][u] = old
    G = EdgeColoredGraph(n, [(a, b, cm[a][b]) for a, b in pairs])
    res, _ = search_rainbow_cycle(G, k, budget)
    return G if res is None else None
