"""Weighted-threshold coalition ROC analysis (Python bindings)."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import __version__, reproduce_paper as _reproduce_paper, run_config as _run_config


def run_config(config, output_dir):
    """Run a batch config (dict or JSON text) and return the report as a dict."""
    text = config if isinstance(config, str) else _json.dumps(config)
    return _json.loads(_run_config(text, str(output_dir)))


def reproduce_paper(output_dir, samples=41, jobs=0):
    """Write the full artifact set and return the report as a dict."""
    return _json.loads(_reproduce_paper(str(output_dir), samples, jobs))
