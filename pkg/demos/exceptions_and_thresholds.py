"""Where the rainbow-triangle threshold stops working.

Above delta^c > n/2 every coloring has a rainbow triangle.  At exactly n/2
the balanced bipartite Latin square and a handful of K4 / K4-e colorings
escape; this script finds them and measures the frontier exhaustively.
"""

from rainbow import find_rainbow_triangle, min_color_degree, mine_k4_exceptions, serialize_ecg
from rainbow.generators import proper_bipartite_coloring
from rainbow.mining import mine_counterexamples, tightness_probe

# %% the bipartite family sits exactly on the boundary
for m in (2, 3, 4):
    G = proper_bipartite_coloring(m)
    print(f"K_{m},{m}: n={G.n} delta^c={min_color_degree(G)} triangle={find_rainbow_triangle(G)}")

# %% the small exceptions
found = mine_k4_exceptions()
print(f"\n{len(found)} colorings of K4 / K4-e with delta^c >= 2 and no rainbow triangle")
print(serialize_ecg(found[0]))

# %% exhaustive frontier for n <= 6 with at most 3 colors
report = mine_counterexamples("RT_HALF", {}, (3, 6), 3, "exhaustive")
for row in report.tightness:
    n = row["n"]
    print(f"n={n}: largest delta^c without a rainbow triangle = {row['max_delta_with_failure']} (n/2 = {n / 2})")
print("violations above n/2:", len(report.violations))

# %% per-vertex version, where the bound is (3n-3)/4
for n in (5, 6):
    delta, G = tightness_probe("RT_VERTEX", {}, n, 3)
    print(f"RT_VERTEX n={n}: some vertex misses every rainbow triangle at delta^c={delta}; "
          f"threshold (3n-3)/4 = {(3 * n - 3) / 4}")
