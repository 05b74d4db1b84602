"""Path audit for complete graphs without long rainbow cycles.

Given a complete edge-colored graph ``G``, a rainbow path
``P = u_1 ... u_p`` and a length ``k``, the auditor computes the endpoint color
classes of the long-cycle argument and checks each of its intermediate
consequences on the concrete instance:

* the cycle lemmas (an endpoint chord into the far part of ``P`` repeats a
  path color; every long chord ``u_s u_t`` does too; two endpoint color sets
  share at most one color; the ``u_1 u_p`` color is forced on a whole range),
* the four claims, and
* the six counting inequalities, with every side evaluated numerically.

Indices in reports are 1-based positions on ``P``.  Segment sets are index
ranges ``u_a .. u_b``, empty when ``a > b``.  Nothing here raises on a failed
check: each outcome is reported as ``pass``, ``fail`` or ``n/a`` (hypothesis
not met), so miners can look for instances where a step breaks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .colordeg import color_degree, min_color_degree
from .detectors import (
    Indeterminate,
    RainbowWitness,
    search_longest_rainbow_path,
    search_rainbow_cycle,
    witness_from_vertices,
)
from .errors import BadK, NotAPath, NotComplete, NotRainbow, PathTooShort
from .graph import EdgeColoredGraph

__all__ = ["Check", "Inequality", "PathAuditReport", "audit_path"]

PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass
class Check:
    status: str
    detail: str = ""

    def as_dict(self) -> dict:
        return {"status": self.status, "detail": self.detail}


@dataclass
class Inequality:
    """A chain ``lhs >= mid >= rhs`` (``mid`` may be None for a plain ``lhs >= rhs``)."""

    name: str
    lhs: int
    mid: int | None
    rhs: int
    status: str = NA
    note: str = ""

    def evaluate(self, applicable: bool) -> "Inequality":
        if not applicable:
            self.status = NA
        else:
            ok = self.lhs >= self.rhs if self.mid is None else self.lhs >= self.mid >= self.rhs
            self.status = PASS if ok else FAIL
        return self

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "mid": self.mid,
            "rhs": self.rhs,
            "status": self.status,
            "note": self.note,
        }


@dataclass
class PathAuditReport:
    n: int
    k: int
    p: int
    delta: int
    input_path: tuple
    path: tuple
    reversed: bool
    cycle_free: bool | None
    path_is_longest: bool | None
    longest_length: int | None
    applicable: bool
    sets: dict = field(default_factory=dict)
    D: tuple = ()
    eps: dict = field(default_factory=dict)
    lemma_checks: dict = field(default_factory=dict)
    claim_checks: dict = field(default_factory=dict)
    inequalities: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    def failures(self) -> list[str]:
        out = [f"lemma {name}" for name, c in self.lemma_checks.items() if c.status == FAIL]
        out += [f"claim {name}" for name, c in self.claim_checks.items() if c.status == FAIL]
        out += [f"inequality {q.name}" for q in self.inequalities if q.status == FAIL]
        return out

    @property
    def ok(self) -> bool:
        return not self.failures()

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "p": self.p,
            "delta": self.delta,
            "input_path": list(self.input_path),
            "path": list(self.path),
            "reversed": self.reversed,
            "cycle_free": self.cycle_free,
            "path_is_longest": self.path_is_longest,
            "longest_length": self.longest_length,
            "applicable": self.applicable,
            "sets": {name: list(v) for name, v in self.sets.items()},
            "D": list(self.D),
            "eps": dict(self.eps),
            "lemma_checks": {k: c.as_dict() for k, c in self.lemma_checks.items()},
            "claim_checks": {k: c.as_dict() for k, c in self.claim_checks.items()},
            "inequalities": [q.as_dict() for q in self.inequalities],
            "flags": list(self.flags),
            "failures": self.failures(),
        }


class _Path:
    """1-based view of a path inside a color matrix."""

    def __init__(self, cm, vertices: Sequence[int]):
        self.cm = cm
        self.u = (None,) + tuple(vertices)
        self.p = len(vertices)

    def seg(self, a: int, b: int) -> list:
        if a > b:
            return []
        assert 1 <= a and b <= self.p, (a, b, self.p)
        return list(self.u[a:b + 1])

    def c(self, i: int, j: int) -> int:
        return self.cm[self.u[i]][self.u[j]]

    def to_seg(self, i: int, a: int, b: int) -> set:
        """C(u_i, u_a P u_b), skipping u_i itself."""
        x = self.u[i]
        row = self.cm[x]
        return {row[y] for y in self.seg(a, b) if y != x}

    def path_colors(self, a: int, b: int) -> set:
        """C(u_a P u_b): colors of the path edges between positions a and b."""
        return {self.c(i, i + 1) for i in range(a, b)}


def _validate(G: EdgeColoredGraph, P, k: int) -> tuple:
    if not G.is_complete():
        raise NotComplete("the path audit needs a complete graph")
    if k < 3:
        raise BadK(f"k must be at least 3, got {k}")
    vs = tuple(P.vertices if isinstance(P, RainbowWitness) else P)
    if isinstance(P, RainbowWitness) and P.kind != "path":
        raise NotAPath(f"expected a path witness, got {P.kind}")
    if len(vs) < 2 or len(set(vs)) != len(vs) or any(not 0 <= v < G.n for v in vs):
        raise NotAPath("path must list at least two distinct vertices of G")
    w = witness_from_vertices(G, "path", vs)
    if isinstance(P, RainbowWitness) and tuple(P.colors) != w.colors:
        raise NotAPath("path colors do not match the graph")
    if len(set(w.colors)) != len(w.colors):
        raise NotRainbow("path colors repeat")
    if len(vs) < 2 * k - 1:
        raise PathTooShort(f"path has {len(vs)} vertices, need at least 2k-1 = {2 * k - 1}")
    return vs


def audit_path(
    G: EdgeColoredGraph,
    P,
    k: int,
    budget=None,
    *,
    cycle_free: bool | None = None,
    path_is_longest: bool | None = None,
) -> PathAuditReport:
    """Audit the rainbow path ``P`` (a path witness or vertex sequence) in ``G``.

    ``cycle_free`` and ``path_is_longest`` may be passed when the caller has
    already certified them; otherwise both are settled by searches limited to
    ``budget`` nodes each (None = unlimited) and left as None when a search
    runs out.  Checks whose hypotheses are not certified are reported ``n/a``.
    """
    vs = _validate(G, P, k)
    n, p = G.n, len(vs)
    delta = min_color_degree(G)
    longest_len = None
    if cycle_free is None:
        res, _ = search_rainbow_cycle(G, k, budget)
        cycle_free = None if isinstance(res, Indeterminate) else res is None
    if path_is_longest is None:
        res, _ = search_longest_rainbow_path(G, budget)
        if isinstance(res, Indeterminate):
            if res.best is not None and res.best.length > p - 1:
                path_is_longest, longest_len = False, res.best.length
        else:
            longest_len = res.length
            path_is_longest = res.length == p - 1
    lemma_ok = cycle_free is True and path_is_longest is True

    report = PathAuditReport(
        n=n, k=k, p=p, delta=delta, input_path=vs, path=vs, reversed=False,
        cycle_free=cycle_free, path_is_longest=path_is_longest,
        longest_length=longest_len, applicable=cycle_free is True,
    )
    if cycle_free is False:
        report.flags.append("audit not applicable: G has a rainbow cycle of length >= k")
    elif cycle_free is None:
        report.flags.append("cycle-freeness not certified within the budget")
    if path_is_longest is False:
        report.flags.append("P is not a longest rainbow path")
    elif path_is_longest is None:
        report.flags.append("maximality of P not certified within the budget")

    cm = G.matrix
    fwd = _Path(cm, vs)
    report.lemma_checks["3.1"] = _lemma_endpoint_chords(fwd, k, lemma_ok)
    report.lemma_checks["3.2"] = _lemma_long_chords(fwd, k, lemma_ok)
    report.lemma_checks["3.3"] = _lemma_shared_colors(fwd, k, lemma_ok)
    l34, l34_proof, orientation = _lemma_forced_color(fwd, k, lemma_ok, report.flags)
    report.lemma_checks["3.4"] = l34
    report.lemma_checks["3.4-proof"] = l34_proof

    if orientation == "reversed":
        vs = vs[::-1]
        report.path = vs
        report.reversed = True
    P_ = _Path(cm, vs)
    oriented = lemma_ok and orientation is not None
    deep = oriented and p >= 3 * k - 5
    if lemma_ok and orientation is None:
        report.flags.append("no orientation satisfies the forced-color lemma; claims not applicable")
    if oriented and p < 3 * k - 5:
        report.flags.append(f"p = {p} < 3k-5 = {3 * k - 5}; claims 3-4 and inequalities not applicable")

    _fill_sets(G, P_, k, report)
    report.claim_checks["1"] = _claim_chord_transfer(P_, k, lemma_ok)
    _claims(P_, k, report, oriented, deep)
    _inequalities(G, P_, k, report, deep)
    return report


# ------------------------------------------------------------------ lemmas

def _lemma_endpoint_chords(P: _Path, k: int, applicable: bool) -> Check:
    if not applicable:
        return Check(NA, "needs a certified cycle-free G and a longest P")
    bad = [i for i in range(k, P.p + 1) if P.c(1, i) not in P.path_colors(1, i)]
    if bad:
        return Check(FAIL, f"c(u1 u_i) missing from C(u1 P u_i) for i in {bad}")
    return Check(PASS, f"{P.p - k + 1} chords checked")


def _lemma_long_chords(P: _Path, k: int, applicable: bool) -> Check:
    if not applicable:
        return Check(NA, "needs a certified cycle-free G and a longest P")
    bad = []
    count = 0
    for s in range(1, P.p + 1):
        for t in range(s + k - 1, P.p + 1):
            count += 1
            if P.c(s, t) not in P.path_colors(s, t):
                bad.append((s, t))
    if bad:
        return Check(FAIL, f"chords outside their segment colors: {bad[:10]}")
    return Check(PASS, f"{count} chords checked")


def _lemma_shared_colors(P: _Path, k: int, applicable: bool) -> Check:
    if not applicable:
        return Check(NA, "needs a certified cycle-free G and a longest P")
    p = P.p
    bad = []
    for s in range(1, k):
        t = k - s
        common = P.to_seg(1, k, p - (t - 1)) & P.to_seg(p, s, p - (k - 1))
        if len(common) > 1:
            bad.append((s, t, sorted(common)))
    if bad:
        return Check(FAIL, f"(s, t, shared colors): {bad}")
    return Check(PASS, f"{k - 1} splits s+t=k checked")


def _lemma_forced_color(P: _Path, k: int, applicable: bool, flags: list):
    """Forced color of ``u_1 u_p``.

    Returns the check as printed (second alternative over ``u_{k-2} .. u_{p-k+1}``),
    the check over the range its cycle argument covers (``u_{k-1} .. u_{p-k+1}``,
    the mirror image of the first alternative), and the orientation in which
    the first alternative holds (forward, reversed or None).
    """
    p = P.p
    c1p = P.c(1, p)
    first = P.to_seg(1, k, p - (k - 2))
    second = P.to_seg(p, k - 2, p - (k - 1))
    mirror = P.to_seg(p, k - 1, p - (k - 1))
    orientation = None
    if first == {c1p}:
        orientation = "forward"
    elif mirror == {c1p}:
        orientation = "reversed"
    if not applicable:
        na = Check(NA, "needs a certified cycle-free G and a longest P")
        return na, na, orientation
    if first != {c1p} and second != {c1p}:
        flags.append(
            "forced-color lemma: neither endpoint color set is the singleton {c(u1 up)}"
        )
    if second != mirror and mirror == {c1p} and first != {c1p}:
        flags.append(
            "forced-color lemma: second alternative holds from u_{k-1} but not from u_{k-2}"
        )
    detail = (
        f"c(u1 up)={c1p}; C(u1, u_k..u_(p-k+2))={sorted(first)}; "
        f"C(up, u_(k-2)..u_(p-k+1))={sorted(second)}; "
        f"C(up, u_(k-1)..u_(p-k+1))={sorted(mirror)}"
    )
    status = PASS if first == {c1p} or second == {c1p} else FAIL
    proof_status = PASS if orientation is not None else FAIL
    return Check(status, detail), Check(proof_status, detail), orientation


# -------------------------------------------------------------- color sets

def _fill_sets(G: EdgeColoredGraph, P: _Path, k: int, report: PathAuditReport) -> None:
    p = P.p
    cm = P.cm
    u1, up = P.u[1], P.u[p]
    on_path = set(P.u[1:])
    off = [x for x in range(G.n) if x not in on_path]
    s = report.sets
    s["A1"] = P.to_seg(1, k, p - 1)
    s["A2"] = P.to_seg(1, 2, k - 1)
    s["B1"] = P.to_seg(p, k - 2, p - (k - 1))
    s["B2"] = P.to_seg(p, 2, k - 3)
    s["B3"] = P.to_seg(p, p - (k - 2), p - 1)
    c1_on = P.to_seg(1, 2, p)
    cp_on = P.to_seg(p, 1, p - 1)
    c1_off = {cm[u1][x] for x in off}
    cp_off = {cm[up][x] for x in off}
    s["C0"] = (c1_off - c1_on) & (cp_off - cp_on)
    s["C1"] = c1_off - (s["C0"] | c1_on)
    s["C2"] = cp_off - (s["C0"] | cp_on)

    reps1 = _reps_into(cm, u1, off)
    repsp = _reps_into(cm, up, off)
    n1 = {reps1[c] for c in s["C1"] | s["C0"]}
    np_ = {repsp[c] for c in s["C2"] | s["C0"]}
    report.D = tuple(sorted(x for x in n1 & np_ if cm[u1][x] != cm[up][x]))
    ambiguous = [
        c for c in s["C1"] | s["C0"] if sum(cm[u1][x] == c for x in off) > 1
    ] + [c for c in s["C2"] | s["C0"] if sum(cm[up][x] == c for x in off) > 1]
    if ambiguous:
        report.flags.append(
            "D depends on the representative choice (colors with several carriers off P)"
        )
    for name in list(s):
        s[name] = tuple(sorted(s[name]))

    c12, cpp = P.c(1, 2), P.c(p - 1, p)
    report.eps = {
        "eps1": int(c12 not in s["A1"]),
        "eps2": int(cpp not in set(s["B1"]) | set(s["B2"])),
        "eps3": int(P.c(1, p) not in s["B1"]),
    }


def _reps_into(cm, v: int, candidates) -> dict:
    reps = {}
    for x in range(len(cm)):
        if x != v and cm[v][x] >= 0:
            reps.setdefault(cm[v][x], x)
    keep = set(candidates)
    return {c: x for c, x in reps.items() if x in keep}


# ------------------------------------------------------------------ claims

def _claim_chord_transfer(P: _Path, k: int, applicable: bool) -> Check:
    if not applicable:
        return Check(NA, "needs a certified cycle-free G and a longest P")
    p = P.p
    bad = []
    checked = 0
    for s in range(1, p + 1):
        for t in range(s + 2 * k - 3, p + 1):
            cst = P.c(s, t)
            span = t - s
            for a in range(s, t + 1):
                for b in range(a + k - 1, min(t, a + span - (k - 2)) + 1):
                    if cst in P.path_colors(a, b):
                        checked += 1
                        if P.c(a, b) != cst:
                            bad.append((s, t, a, b))
    if bad:
        return Check(FAIL, f"(s, t, a, b) with c(u_a u_b) != c(u_s u_t): {bad[:10]}")
    return Check(PASS, f"{checked} nested chord pairs checked")


def _claims(P: _Path, k: int, report: PathAuditReport, oriented: bool, deep: bool) -> None:
    s = {name: set(v) for name, v in report.sets.items()}
    p = P.p
    c1p = P.c(1, p)
    need = "needs certified hypotheses and the forced-color orientation"
    if oriented:
        common = s["A1"] & s["B1"]
        report.claim_checks["2"] = Check(
            PASS if len(common) <= 1 else FAIL, f"A1 & B1 = {sorted(common)}"
        )
    else:
        report.claim_checks["2"] = Check(NA, need)
    if deep:
        extra = (s["A1"] & s["B2"]) - (s["B1"] | {c1p})
        report.claim_checks["3"] = Check(
            PASS if len(extra) <= 1 else FAIL, f"(A1 & B2) - (B1 + c(u1 up)) = {sorted(extra)}"
        )
        report.claim_checks["4"] = Check(
            PASS if len(report.D) <= 2 else FAIL, f"D = {list(report.D)}"
        )
        c12, cpp = P.c(1, 2), P.c(p - 1, p)
        problems = []
        # for k = 3 the B1 range starts at u1 itself, where the cycle argument
        # for c(u1 u2) reuses the edge u1 u2; only B2 is checked then
        outside = s["B1"] | s["B2"] if k >= 4 else s["B2"]
        if c12 in outside:
            problems.append("c(u1 u2) in B1 | B2" if k >= 4 else "c(u1 u2) in B2")
        if cpp in s["A1"]:
            problems.append("c(u_(p-1) up) in A1")
        if c1p not in s["A1"]:
            problems.append("c(u1 up) not in A1")
        report.claim_checks["endpoint-edges"] = Check(
            FAIL if problems else PASS, "; ".join(problems) or "end edges placed as expected"
        )
    else:
        why = need if not oriented else "needs p >= 3k-5"
        for name in ("3", "4", "endpoint-edges"):
            report.claim_checks[name] = Check(NA, why)


# ------------------------------------------------------------- inequalities

def _inequalities(G: EdgeColoredGraph, P: _Path, k: int, report: PathAuditReport, applicable: bool) -> None:
    s = {name: set(v) for name, v in report.sets.items()}
    e1, e2, e3 = report.eps["eps1"], report.eps["eps2"], report.eps["eps3"]
    p, n, delta = P.p, G.n, report.delta
    cm = P.cm
    u1, up = P.u[1], P.u[p]
    c12, cpp, c1p = P.c(1, 2), P.c(p - 1, p), P.c(1, p)
    b2x = s["B2"] - (s["B1"] | {c1p})

    first = len(s["A1"]) + len(s["C0"]) + len(s["C1"]) + e1
    second = len(s["B1"]) + len(b2x) + len(s["C0"]) + len(s["C2"]) + e2 + e3
    ineqs = [
        Inequality(
            "1", first, color_degree(G, u1) - len(s["A2"] - {c12}), delta - (k - 3),
            note="|A1|+|C0|+|C1|+e1 >= dc(u1)-|A2-c(u1u2)| >= delta-(k-3)",
        ),
        Inequality(
            "2", second, color_degree(G, up) - len(s["B3"] - {cpp}), delta - (k - 3),
            note="|B1|+|B2'|+|C0|+|C2|+e2+e3 >= dc(up)-|B3-c(up-1 up)| >= delta-(k-3)",
        ),
    ]
    on_path = set(P.u[1:])
    off = [x for x in range(n) if x not in on_path]
    reps1 = _reps_into(cm, u1, off)
    repsp = _reps_into(cm, up, off)
    covered = {reps1[c] for c in s["C1"]} | {repsp[c] for c in s["C2"]}
    twins = sum(1 for x in off if cm[u1][x] == cm[up][x] and cm[u1][x] in s["C0"])
    ineqs.append(Inequality(
        "3", len(off), len(covered) + twins, len(s["C1"]) + len(s["C2"]) + len(s["C0"]) - 3,
        note="|V(P^C)| >= |N_C1(u1) | N_C2(up)| + |twins in C0| >= |C1|+|C2|+|C0|-3",
    ))
    path_cols = [P.c(i, i + 1) for i in range(1, p)]
    hit = s["A1"] | s["B1"] | s["B2"]
    mid4 = sum(c in hit for c in path_cols) + sum(c in s["C0"] for c in path_cols) + e1 + e2 + 1
    printed = len(s["A1"]) + len(s["B1"]) + len(b2x) + e1 + e2 - 1
    ineqs.append(Inequality(
        "4", p, mid4, printed + len(s["C0"]),
        note=(
            "|V(P)| >= #path edges in A1|B1|B2 + #in C0 + e1+e2+1 >= "
            "|A1|+|B1|+|B2'|+|C0|+e1+e2-1 (the |C0| term is needed by (5); "
            f"printed bound without it = {printed})"
        ),
    ))
    ineqs.append(Inequality(
        "5", n, None, first + second - e3 - 4,
        note="n >= (|A1|+|C0|+|C1|+e1) + (|B1|+|B2'|+|C0|+|C2|+e2) - 4",
    ))
    ineqs.append(Inequality(
        "6", n, 2 * (delta - (k - 3)) - e3 - 4, 2 * delta - 2 * k + 1,
        note="n >= 2(delta-(k-3)) - e3 - 4 >= 2 delta - 2k + 1",
    ))
    report.inequalities = [q.evaluate(applicable) for q in ineqs]
