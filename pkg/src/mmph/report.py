"""Machine-readable analysis reports (schema ``mmph-report/1``).

Exact values are rendered as strings: rationals as ``p/q`` and field values
as ``a+b*r2``.  The only floating-point fields are explicitly advisory
(eigenvalue ranges of non-scalar operators) plus wall-clock timings.
"""

from __future__ import annotations

import json
import time
from fractions import Fraction

from .assignment import decide_binary, decide_critical, has_parity_proof
from .field import QSqrt2, format_q2, format_rational
from .geometry import Coordinatization
from .hypergraph import Hypergraph, validate
from .indices import index_report
from .loops import largest_loop, shortest_loop
from .operators import format_matrix, operator_report

SCHEMA = "mmph-report/1"


def _frac(x: Fraction | None) -> str | None:
    return None if x is None else format_rational(x)


def analyze(
    h: Hypergraph,
    entry_id: str | None = None,
    with_critical: bool = False,
    with_loops: bool = False,
    coords: Coordinatization | None = None,
    with_operators: bool = False,
    loop_budget: int = 5_000_000,
) -> dict:
    """Run the requested analyses and assemble one JSON-ready report."""
    timings: dict[str, float] = {}

    def timed(name: str, fn):
        start = time.perf_counter()
        result = fn()
        timings[name] = round(time.perf_counter() - start, 6)
        return result

    report: dict = {
        "schema": SCHEMA,
        "id": entry_id,
        "mmph": None,
        "k": h.vertex_count,
        "l": h.edge_count,
        "dimension": h.dimension,
    }
    from .encoding import serialize_mmph

    report["mmph"] = serialize_mmph(h)
    violations = validate(h)
    report["valid"] = not violations
    report["violations"] = [str(v) for v in violations]
    verdict = timed("binary", lambda: decide_binary(h))
    report["binary"] = {"is_binary": verdict.is_binary, "witness": verdict.witness}
    report["parity_proof"] = has_parity_proof(h)
    idx = timed("indices", lambda: index_report(h))
    report["indices"] = {
        "hi_c": idx.hi_c,
        "hi_q": _frac(idx.hi_q),
        "hi_q_unc": _frac(idx.hi_q_unc),
        "admissible_max": idx.admissible_max,
        "weak_contextual": idx.weak_contextual,
        "strong_contextual": idx.strong_contextual,
        "per_vertex_prob": {v: _frac(p) for v, p in idx.per_vertex_prob.items()},
    }
    if with_critical and not verdict.is_binary:
        crit = timed("critical", lambda: decide_critical(h))
        report["critical"] = {
            "is_critical": crit.is_critical,
            "surviving_edges": list(crit.surviving_edges),
        }
    else:
        report["critical"] = None
    if with_loops:
        short = timed("shortest_loop", lambda: shortest_loop(h))
        big = timed("largest_loop", lambda: largest_loop(h, budget=loop_budget))
        report["loops"] = {
            "shortest": short,
            "largest": big.order,
            "largest_exact": big.exact,
        }
    else:
        report["loops"] = None
    if with_operators:
        if coords is None:
            raise ValueError("operator analysis needs a coordinatization")
        op = timed(
            "operators", lambda: operator_report(coords, list(h.vertices))
        )
        report["operators"] = {
            "order": list(op.order),
            "matrix": format_matrix(op.matrix),
            "is_diagonal": op.is_diagonal,
            "is_scalar": op.is_scalar,
            "scalar_value": format_q2(op.scalar_value) if op.scalar_value is not None else None,
            "max_classical": _frac(op.max_classical),
            "verdict": op.verdict,
            "orthogonal_pairs": op.orthogonal_pairs,
            "eigenvalue_range_float": (
                list(op.eigenvalue_range) if op.eigenvalue_range else None
            ),
        }
    else:
        report["operators"] = None
    report["timings_s"] = timings
    return report


def to_json(report: dict, indent: int | None = 2) -> str:
    return json.dumps(report, indent=indent)
