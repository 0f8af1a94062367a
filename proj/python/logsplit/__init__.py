"""Search, verify and construct witnesses (h, e, k) with (k*x0 - e)*h = Lie(h)
for algebraic ODEs y^(m) = f over Q or Q(t).

Equations use y, y', y'', y^(4), ... and t; witness expressions use x0, x1, ...
"""

import json

from ._core import (
    FieldViolation,
    OrderViolation,
    ParseError,
    SingularInstance,
    construct,
    numcheck,
    verify,
)
from ._core import search_json as _search_json

__all__ = [
    "FieldViolation",
    "OrderViolation",
    "ParseError",
    "SingularInstance",
    "construct",
    "numcheck",
    "search",
    "verify",
]


def search(equation, degree=3, kmax=3, field="auto", e_tdeg=2):
    """Run the witness search; returns the JSON report as a dict.

    The dict carries the keys outcome, witness, bounds, darboux_pairs and
    timing_ms, plus the engine's diagnostic notes under "notes".
    """
    text, notes = _search_json(equation, degree, kmax, field, e_tdeg)
    report = json.loads(text)
    report["notes"] = list(notes)
    return report
