"""Core hypergraph model: labels, edges, structural validation.

Vertices are ASCII labels drawn from a fixed 90-character alphabet; label
rank r >= 90 is written with one ``+`` prefix per multiple of 90.  Edges are
ordered tuples of distinct labels; order is preserved so that corpus strings
round-trip byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

ALPHABET = (
    "123456789"
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "abcdefghijklmnopqrstuvwxyz"
    "!\"#$%&'()*-/:;<=>?@[\\]^_`{|}~"
)
_CHAR_RANK = {ch: i for i, ch in enumerate(ALPHABET)}

Edge = tuple[str, ...]


class MmphError(Exception):
    """Base error for this package."""


class PreconditionError(MmphError):
    """An operation was called on input it does not accept."""


def label_rank(label: str) -> int:
    """Rank of a label: alphabet position plus 90 per ``+`` prefix."""
    if not label:
        raise ValueError("empty label")
    prefixes = len(label) - 1
    if label[:prefixes] != "+" * prefixes or label[-1] not in _CHAR_RANK:
        raise ValueError(f"bad label {label!r}")
    return 90 * prefixes + _CHAR_RANK[label[-1]]


def rank_label(rank: int) -> str:
    """Inverse of :func:`label_rank` (defined for any rank >= 0)."""
    if rank < 0:
        raise ValueError("rank must be non-negative")
    return "+" * (rank // 90) + ALPHABET[rank % 90]


@dataclass(frozen=True)
class Violation:
    """One structural-rule violation; violations are data, not exceptions."""

    rule: str
    message: str
    edges: tuple[int, ...] = ()
    vertices: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.rule}: {self.message}"


class ValidationError(MmphError):
    def __init__(self, violations: list[Violation]):
        super().__init__("; ".join(str(v) for v in violations))
        self.violations = violations


@dataclass(frozen=True)
class Hypergraph:
    """An orthogonality hypergraph of dimension ``n`` (edges of size 2..n)."""

    edges: tuple[Edge, ...]
    dimension: int = 3

    @cached_property
    def vertices(self) -> tuple[str, ...]:
        """Vertices in order of first appearance."""
        seen: dict[str, None] = {}
        for e in self.edges:
            for v in e:
                seen.setdefault(v)
        return tuple(seen)

    @cached_property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> dict[str, int]:
        deg: dict[str, int] = {}
        for e in self.edges:
            for v in e:
                deg[v] = deg.get(v, 0) + 1
        return deg

    @property
    def name(self) -> str:
        """The conventional ``k-l`` size tag."""
        return f"{self.vertex_count}-{self.edge_count}"

    def edge_sets(self) -> list[frozenset[str]]:
        return [frozenset(e) for e in self.edges]

    def without_edge(self, index: int) -> Hypergraph:
        """Remove one edge; vertices orphaned by the removal drop out."""
        rest = tuple(e for i, e in enumerate(self.edges) if i != index)
        return Hypergraph(rest, self.dimension)

    def same_edge_sets(self, other: Hypergraph) -> bool:
        """Equality as edge-set multisets (ignores all ordering)."""
        return sorted(self.edge_sets(), key=sorted) == sorted(
            other.edge_sets(), key=sorted
        )


def validate(h: Hypergraph) -> list[Violation]:
    """Check the structural rules; an empty list means the set is well formed.

    Rules: every edge has 2..n distinct vertices; no two edges are equal as
    sets; two distinct edges may share at most n-2 vertices (for n=3 this
    forbids any two edges overlapping in two vertices).
    """
    out: list[Violation] = []
    n = h.dimension
    if n < 3:
        out.append(Violation("dimension", f"dimension {n} < 3"))
    sets = h.edge_sets()
    for i, e in enumerate(h.edges):
        if len(set(e)) != len(e):
            out.append(
                Violation("edge-distinct", f"edge {i} repeats a vertex", (i,), e)
            )
        if len(e) < 2:
            out.append(Violation("edge-size", f"edge {i} has fewer than 2 vertices", (i,)))
        elif len(e) > n:
            out.append(
                Violation("edge-size", f"edge {i} has {len(e)} > {n} vertices", (i,))
            )
    for i, j in combinations(range(len(sets)), 2):
        common = sets[i] & sets[j]
        if sets[i] == sets[j]:
            out.append(
                Violation(
                    "duplicate-edge",
                    f"edges {i} and {j} are equal as sets",
                    (i, j),
                    tuple(sorted(common)),
                )
            )
        elif len(common) > n - 2:
            out.append(
                Violation(
                    "overlap",
                    f"edges {i} and {j} share {len(common)} vertices "
                    f"(at most {n - 2} allowed)",
                    (i, j),
                    tuple(sorted(common)),
                )
            )
    return out


def require_valid(h: Hypergraph) -> Hypergraph:
    violations = validate(h)
    if violations:
        raise ValidationError(violations)
    return h


def fresh_labels(h: Hypergraph, count: int) -> list[str]:
    """The ``count`` lowest-rank labels not used by ``h``, in rank order."""
    used = {label_rank(v) for v in h.vertices}
    out: list[str] = []
    rank = 0
    while len(out) < count:
        if rank not in used:
            out.append(rank_label(rank))
        rank += 1
    return out
