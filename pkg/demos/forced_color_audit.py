"""Auditing the long-cycle argument on concrete graphs.

For a complete graph with no rainbow cycle of length >= k and a longest
rainbow path P = u1 .. up, the argument pins the color of the chord u1 up on
a whole stretch of P.  The printed statement names the stretch from
u_{k-2} on the u_p side; the cycle argument only covers it from u_{k-1}.
The first graph below separates the two.  The second (k = 3) breaks both,
because c(u1 up) lands on a path edge in the middle.
"""

from pathlib import Path

from rainbow import audit_path, read_ecg

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

for name, path, k in [
    ("forced_color_k4.ecg", (0, 3, 2, 1, 6, 5, 4, 7), 4),
    ("forced_color_k3_middle.ecg", (0, 1, 4, 2, 5, 3), 3),
]:
    G = read_ecg(DATA / name)
    r = audit_path(G, path, k)
    print(f"== {name}: n={G.n} k={k} p={r.p}")
    print(f"   cycle-free certified: {r.cycle_free}; P longest: {r.path_is_longest}")
    for key in ("3.4", "3.4-proof"):
        c = r.lemma_checks[key]
        print(f"   {key:<9} {c.status}: {c.detail}")
    for flag in r.flags:
        print(f"   note: {flag}")

# %% a mined instance where every check holds
from rainbow.detectors import longest_rainbow_path
from rainbow.mining import cycle_free_instance

for seed in range(200):
    G = cycle_free_instance(12, 5, seed)
    P = None if G is None else longest_rainbow_path(G)
    if P is not None and len(P.vertices) >= 10:
        break
r = audit_path(G, P.vertices, 5)
print(f"\n== mined K12 (seed {seed}), k=5, p={r.p}: failures {r.failures()}")
print("   sets:", {k: list(v) for k, v in r.sets.items()})
print("   eps:", r.eps, " D:", list(r.D))
for q in r.inequalities:
    print(f"   ({q.name}) {q.lhs} >= {q.mid} >= {q.rhs}: {q.status}")
