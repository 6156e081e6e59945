"""Polygon (loop) analysis of edge cycles.

An m-gon here is a chordless cycle of m >= 3 distinct edges: consecutive
edges share exactly one connecting vertex, the m connecting vertices are
distinct, and non-consecutive loop edges are disjoint.  This is the notion
under which real-coordinatizable 3-dim sets admit no loop shorter than a
pentagon, and it reproduces the published largest-polygon labels of the
catalogued critical sets.

The appendix-style annotation serializes the loop edges first, then ``,,,``,
then the remaining edges with ``*`` after every vertex that occurs in some
loop edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .hypergraph import Hypergraph, PreconditionError


def shortest_loop(h: Hypergraph) -> int:
    """Length of the shortest loop, or 0 for an acyclic set.

    Computed as half the girth of the bipartite vertex/edge incidence graph;
    a shortest cycle there is automatically chordless.
    """
    adj: dict[tuple[str, object], list[tuple[str, object]]] = {}
    for v in h.vertices:
        adj[("v", v)] = []
    for i, e in enumerate(h.edges):
        adj[("e", i)] = []
        for v in e:
            adj[("e", i)].append(("v", v))
            adj[("v", v)].append(("e", i))
    best: int | None = None
    for start in adj:
        dist = {start: 0}
        parent: dict[object, object] = {start: None}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent.get(w) != u:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    if best is None:
        return 0
    # bipartite girth is even; each loop edge contributes two hops
    return best // 2


@dataclass(frozen=True)
class LoopSearchResult:
    order: int  # largest loop found (exact when not truncated)
    exact: bool
    loop: tuple[int, ...]  # edge indices of one maximal loop, cycle order
    nodes: int


def largest_loop(h: Hypergraph, budget: int = 5_000_000) -> LoopSearchResult:
    """Largest loop order by exhaustive DFS with reachability pruning.

    When the node budget runs out the result carries the best loop found so
    far and ``exact=False``.
    """
    n = h.edge_count
    esets = h.edge_sets()
    nbrs: list[list[int]] = [[] for _ in range(n)]
    shared: dict[tuple[int, int], frozenset[str]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            common = esets[i] & esets[j]
            if common:
                nbrs[i].append(j)
                nbrs[j].append(i)
                shared[i, j] = shared[j, i] = common
    best = 0
    best_loop: tuple[int, ...] = ()
    nodes = 0
    truncated = False

    def reach_count(cur: int, allowed: set[int]) -> int:
        seen = {cur}
        stack = [cur]
        count = 0
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    count += 1
                    stack.append(w)
        return count

    def dfs(
        start: int,
        cur: int,
        path: list[int],
        union: set[str],
        connectors: set[str],
    ) -> None:
        nonlocal best, best_loop, nodes, truncated
        nodes += 1
        if nodes > budget:
            truncated = True
            return
        in_path = set(path)
        allowed = {e for e in range(start + 1, n) if e not in in_path}
        if len(path) + 1 + reach_count(cur, allowed) <= best:
            return
        for nxt in nbrs[cur]:
            if truncated:
                return
            if nxt <= start or nxt in in_path:
                continue
            link = shared[cur, nxt]
            if len(link) != 1:
                continue  # ambiguous double overlap: not a polygon side
            (v,) = link
            if v in connectors:
                continue
            overlap = esets[nxt] & union
            if len(path) + 1 >= 3:
                closing = shared.get((nxt, start))
                if closing is not None and len(closing) == 1:
                    (w,) = closing
                    if w != v and w not in connectors and overlap == {v, w}:
                        if len(path) + 1 > best:
                            best = len(path) + 1
                            best_loop = tuple(path + [nxt])
            if overlap == {v}:
                path.append(nxt)
                dfs(start, nxt, path, union | esets[nxt], connectors | {v})
                path.pop()

    for s in range(n):
        if truncated:
            break
        dfs(s, s, [s], set(esets[s]), set())
    return LoopSearchResult(best, not truncated, best_loop, nodes)


def validate_loop(h: Hypergraph, loop: list[int]) -> list[str]:
    """Problems that keep ``loop`` (edge indices, cycle order) from being a loop."""
    problems = []
    m = len(loop)
    if m < 3:
        problems.append(f"loop needs at least 3 edges, got {m}")
    if any(i < 0 or i >= h.edge_count for i in loop):
        problems.append("edge index out of range")
        return problems
    if len(set(loop)) != m:
        problems.append("loop repeats an edge")
        return problems
    esets = h.edge_sets()
    connectors = []
    for t in range(m):
        common = esets[loop[t]] & esets[loop[(t + 1) % m]]
        if len(common) != 1:
            problems.append(
                f"edges {loop[t]} and {loop[(t + 1) % m]} share {len(common)} vertices"
            )
        else:
            connectors.append(next(iter(common)))
    if len(set(connectors)) != len(connectors):
        problems.append("connecting vertices are not distinct")
    return problems


def loop_marking(h: Hypergraph, loop: list[int]) -> str:
    """Serialize with the loop edges first, ``,,,``, then starred tail edges."""
    problems = validate_loop(h, loop)
    if problems:
        raise PreconditionError("; ".join(problems))
    loop_vertices = {v for i in loop for v in h.edges[i]}
    head = ",".join("".join(h.edges[i]) for i in loop)
    tail_edges = [e for i, e in enumerate(h.edges) if i not in set(loop)]
    tail = ",".join(
        "".join(v + ("*" if v in loop_vertices else "") for v in e)
        for e in tail_edges
    )
    return f"{head},,,{tail}."


def strip_loop_annotation(text: str) -> str:
    """Turn an annotated listing back into a plain hypergraph string."""
    body = text.replace(",,,", ",").replace("*", "")
    body = "".join(ch for ch in body if not ch.isspace())
    return body
