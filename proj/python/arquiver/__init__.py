"""Auslander-Reiten quivers of Dynkin ext-quivers (bindings to the C++ library)."""

import json

from ._core import (
    ArqError,
    ValuedQuiver,
    arrow_counts,
    check,
    classify,
    closed_form_rho_m,
    coxeter,
    dot,
    knit_hammock,
    opposite,
    parse,
    report_json,
)


def report(q, hammocks=False):
    """Full report as a dict with the JSON schema of the CLI."""
    return json.loads(report_json(q, hammocks))


def error_kind(err):
    """Kind name of an ArqError, e.g. 'TwoCycle'."""
    return str(err).split(" ", 1)[0].rstrip(":")


__all__ = [
    "ArqError",
    "ValuedQuiver",
    "arrow_counts",
    "check",
    "classify",
    "closed_form_rho_m",
    "coxeter",
    "dot",
    "error_kind",
    "knit_hammock",
    "opposite",
    "parse",
    "report",
    "report_json",
]
