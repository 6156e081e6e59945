"""Hypergraph contextuality indices.

Per vertex, the calibrated detection probability averages 1/|e| over its
edges (1/3 for a triplet port, 1/2 for a considered doublet port).  The
calibrated quantum index sums these over all vertices; the uncalibrated
index counts every port at 1/3, i.e. k/3.  Both are compared exactly against
the classical index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .assignment import admissible_max, classical_index
from .hypergraph import Hypergraph, PreconditionError


@dataclass(frozen=True)
class IndexReport:
    hi_c: int | None  # None: no full-context classical assignment exists
    hi_q: Fraction
    hi_q_unc: Fraction
    admissible_max: int | None  # skipped for large sets unless requested
    per_vertex_prob: dict[str, Fraction]

    @property
    def weak_contextual(self) -> bool | None:
        return None if self.hi_c is None else self.hi_q > self.hi_c

    @property
    def strong_contextual(self) -> bool | None:
        return None if self.hi_c is None else self.hi_q_unc > self.hi_c


def per_vertex_probabilities(h: Hypergraph) -> dict[str, Fraction]:
    """Average of 1/|e| over the edges at each vertex, exactly."""
    sums: dict[str, Fraction] = {v: Fraction(0) for v in h.vertices}
    for e in h.edges:
        w = Fraction(1, len(e))
        for v in e:
            sums[v] += w
    return {v: sums[v] / h.degrees[v] for v in h.vertices}


_ADMISSIBLE_AUTO_LIMIT = 40


def index_report(h: Hypergraph, with_admissible: bool | None = None) -> IndexReport:
    """Compute all indices of a 3-dimensional set with 2- and 3-edges.

    ``with_admissible=None`` computes the at-most-one-per-edge maximum only
    for sets small enough for it to be cheap.
    """
    if h.dimension != 3:
        raise PreconditionError("indices are defined here for dimension 3")
    oversized = [e for e in h.edges if len(e) > 3]
    if oversized:
        raise PreconditionError(f"edge {''.join(oversized[0])} has more than 3 vertices")
    per_vertex = per_vertex_probabilities(h)
    hi_q = sum(per_vertex.values(), Fraction(0))
    hi_q_unc = Fraction(h.vertex_count, 3)
    if with_admissible is None:
        with_admissible = h.vertex_count <= _ADMISSIBLE_AUTO_LIMIT
    return IndexReport(
        hi_c=classical_index(h),
        hi_q=hi_q,
        hi_q_unc=hi_q_unc,
        admissible_max=admissible_max(h) if with_admissible else None,
        per_vertex_prob=per_vertex,
    )


def calibration_plan(h: Hypergraph) -> dict[int, Fraction]:
    """Relative input rates per edge: 3/2 for doublet gates, 1 for triplets.

    Fed at these ratios, every considered out-port fires equally often.
    """
    if any(len(e) not in (2, 3) for e in h.edges):
        raise PreconditionError("calibration expects edges of size 2 or 3")
    return {
        i: (Fraction(3, 2) if len(e) == 2 else Fraction(1))
        for i, e in enumerate(h.edges)
    }
