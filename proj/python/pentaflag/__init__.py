"""Exact verification of the C5-density certificate for K_{k+1}-free graphs."""

import json

from ._core import (
    enumerate_graph6,
    five_cycle_count,
    module_version,
    multipartite_c5_count,
    opt_formula,
    run,
    turan_density_c5,
)

__all__ = [
    "enumerate_graph6",
    "five_cycle_count",
    "module_version",
    "multipartite_c5_count",
    "opt_formula",
    "run",
    "run_json",
    "turan_density_c5",
]


def run_json(*args):
    """Run a command with --format json and return (exit code, parsed report)."""
    code, out, err = run(["--format", "json", *args])
    if code == 2:
        raise ValueError(err.strip())
    return code, json.loads(out)
