"""Potential-number stability engine for small graphs."""

import json

from . import _potstab
from ._potstab import (
    CapExceeded,
    InvariantViolation,
    ParseError,
    format_sequence,
    is_graphic,
    l1_distance,
    layoff,
    parse_sequence,
)

__all__ = [
    "CapExceeded",
    "InvariantViolation",
    "ParseError",
    "analyze",
    "format_sequence",
    "graph",
    "is_graphic",
    "l1_distance",
    "layoff",
    "parse_sequence",
    "potentially",
    "probe",
    "rho",
    "sigma_exact",
    "target_family",
]


def graph(expr, cap=16):
    """Order and 1-based edge list of a generator expression or edge list."""
    return json.loads(_potstab.graph_json(expr, cap))


def analyze(expr):
    """Profile, both stability verdicts, and the target family pattern."""
    return json.loads(_potstab.analyze_json(expr))


def target_family(expr, n):
    return json.loads(_potstab.target_family_json(expr, n))


def rho(expr, n):
    return json.loads(_potstab.rho_json(expr, n))


def potentially(seq, expr):
    """Certificate dict; `potentially` is True when some realization contains H."""
    return json.loads(_potstab.potentially_json(seq, expr))


def sigma_exact(expr, n, threads=1):
    return json.loads(_potstab.sigma_exact_json(expr, n, threads))


def probe(seq, expr, f_override=None, epsilon=0.25, delta=None):
    """Run the stability probe; returns {"verdict": ..., "trace": ...}."""
    return json.loads(_potstab.probe_json(seq, expr, f_override, epsilon, delta))
