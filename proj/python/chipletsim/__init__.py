"""Chiplet in-memory-computing accelerator simulator.

Thin python veneer over the C++ core: the heavy operations return JSON from
the extension module and are decoded to plain dicts here.
"""

import json as _json

from ._core import (
    SimError,
    __version__,
    chips_per_wafer,
    cost_per_good_die,
    die_yield,
    generate_trace,
    normalized_cost,
    simulate_trace,
)
from ._core import run_json as _run_json
from ._core import run_text_json as _run_text_json
from ._core import sweep_csv as _sweep_csv

__all__ = [
    "SimError",
    "__version__",
    "chips_per_wafer",
    "cost_per_good_die",
    "die_yield",
    "generate_trace",
    "normalized_cost",
    "run",
    "run_text",
    "simulate_trace",
    "sweep_csv",
]


def run(network_path, config_path=None, concurrent=True):
    """Run the full pipeline over files; returns the report as a dict."""
    return _json.loads(
        _run_json(str(network_path), str(config_path or ""), concurrent)
    )


def run_text(network_text, config_text="", concurrent=True):
    """Run the full pipeline over in-memory CSV/INI text; returns a dict."""
    return _json.loads(_run_text_json(network_text, config_text, concurrent))


def sweep_csv(network_path, axis, values, config_path=None):
    """Re-run the pipeline over an axis; returns plot-ready CSV text."""
    return _sweep_csv(str(network_path), str(config_path or ""), axis, list(values))
