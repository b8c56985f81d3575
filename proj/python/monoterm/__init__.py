# Copyright (c) monoterm contributors.
# SPDX-License-Identifier: Apache-2.0
"""Termination analysis for monotone integer loops."""

import json

from ._core import ParseError, canonical, generate, psi_a, psi_prime_a
from ._core import analyze_json as _analyze_json
from ._core import run_json as _run_json

__all__ = ["ParseError", "analyze", "canonical", "generate", "psi_a", "psi_prime_a", "run"]


def analyze(text, oracle_check=False, max_steps=0):
    """Decide the loop in `text`; returns the CLI's JSON verdict as a dict."""
    return json.loads(_analyze_json(text, oracle_check, max_steps))


def run(text, max_steps=0):
    """Execute the loop concretely; returns outcome, steps and, for cycles, period."""
    return json.loads(_run_json(text, max_steps))
