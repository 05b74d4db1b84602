"""Rainbow substructures in edge-colored graphs.

Detection of rainbow triangles, C4s, paths and long cycles; color-degree
bookkeeping; executable lemma predicates and a path auditor; seeded
generators; and a theorem catalog with campaign and mining drivers.
"""

from .audit import PathAuditReport, audit_path
from .campaign import TheoremReport, run_campaign
from .colordeg import (
    color_degree,
    color_degree_table,
    colors_between,
    min_color_degree,
    representative_neighborhood,
    restricted_representatives,
)
from .detectors import (
    Indeterminate,
    RainbowWitness,
    SearchBudget,
    find_rainbow_c4,
    find_rainbow_cycle_at_least,
    find_rainbow_triangle,
    longest_rainbow_path,
    rainbow_c4_through,
    rainbow_triangle_through,
)
from .errors import RainbowError
from .generators import GenSpec, enumerate_colorings, generate, mine_k4_exceptions
from .graph import EdgeColoredGraph, build_graph, parse_ecg, read_ecg, serialize_ecg, write_ecg
from .lemmata import (
    common_fresh_neighborhood,
    has_dependence_property,
    min_outdegree_witness,
    orient_dependence_set,
)
from .mining import MiningReport, mine_counterexamples
from .theorems import Outcome, TheoremId, check_conclusion, check_hypothesis

__version__ = "0.1.0"
