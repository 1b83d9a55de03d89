"""Exact partially deterministic polytopes over finite correlation scenarios.

Thin JSON-string wrappers over the C++ core; parse results with json.loads.
"""

try:
    from ._pdpoly import *  # noqa: F401,F403  (wheel layout)
except ImportError:  # in-tree build: the extension sits on PYTHONPATH
    from _pdpoly import *  # noqa: F401,F403

__all__ = [
    "uniform_scenario",
    "scenario_info",
    "vertices",
    "membership",
    "classify",
    "compare_collections",
    "pr_box",
    "partial_pr_box",
    "evaluate_inequality",
    "sequential_to_pd",
    "fine_round_trip",
    "inseparability_report",
]
