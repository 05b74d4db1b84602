"""A short tour of seeded campaigns and random mining."""

import json

from rainbow.campaign import default_template, run_campaign
from rainbow.mining import mine_counterexamples

# %% each theorem on instances that just clear its hypothesis
cases = [
    ("RT_VERTEX", {}, 20),
    ("C4_VERTEX", {}, 20),
    ("LONGCYC_CKRY_FIXED", {}, 16),
    ("MAIN_COMPLETE", {"k": 6}, 30),
    ("PATH_LB", {"t": 8}, 12),
]
for theorem, params, n in cases:
    gen = default_template(theorem, n, params, seed=0)
    r = run_campaign(theorem, params, gen, 50, 10**6)
    print(f"{theorem:<20} n={n} delta>={gen.target_delta}: {r.verified}/{r.hypothesis_met} verified, "
          f"{len(r.violations)} violations")

# %% the open conjecture, sampled
r = mine_counterexamples("CONJ_CKRY", {"k": 5}, (7, 10), 8, "random", samples=100, seed=1)
print(json.dumps(r.as_dict()["counts"]), r.tightness)
