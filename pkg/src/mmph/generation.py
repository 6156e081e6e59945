"""Seeded generation of critical non-binary sets from master sets.

Each sample runs an independent randomized walk: optional degree-one vertex
strips (always sound: a stripped set stays non-binary) interleaved with
single-edge removals that are committed only when the set stays non-binary,
until a full sweep commits nothing.  The end state is critical by
construction.  Samples are deduplicated by a structural signature with an
exact isomorphism check on collisions, so the output is a list of distinct
criticals; everything is reproducible from (master, samples, seed)
regardless of worker count.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .assignment import decide_binary
from .encoding import parse_mmph, serialize_mmph
from .hypergraph import Hypergraph, PreconditionError
from .loops import shortest_loop

Signature = tuple

_LOOP_CUTOFF = 8


def _per_edge_loop_profile(h: Hypergraph, cutoff: int = _LOOP_CUTOFF) -> tuple[int, ...]:
    """Shortest loop through each edge, 0 when none within the cutoff."""
    esets = h.edge_sets()
    n = h.edge_count
    nbrs: list[list[int]] = [[] for _ in range(n)]
    shared: dict[tuple[int, int], frozenset[str]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            common = esets[i] & esets[j]
            if common:
                nbrs[i].append(j)
                nbrs[j].append(i)
                shared[i, j] = shared[j, i] = common

    def through(start: int) -> int:
        best = 0

        def dfs(cur: int, path_len: int, used: set[int], connectors: set[str]) -> None:
            nonlocal best
            if best and path_len + 1 >= best:
                return
            if path_len + 1 > cutoff:
                return
            for nxt in nbrs[cur]:
                if nxt == start and path_len >= 2:
                    continue  # closure handled below
                if nxt in used:
                    continue
                link = shared[cur, nxt]
                if len(link) != 1:
                    continue
                (v,) = link
                if v in connectors:
                    continue
                if path_len + 1 >= 3:
                    closing = shared.get((nxt, start))
                    if closing is not None and len(closing) == 1:
                        (w,) = closing
                        if w != v and w not in connectors:
                            if best == 0 or path_len + 1 < best:
                                best = path_len + 1
                dfs(nxt, path_len + 1, used | {nxt}, connectors | {v})

        dfs(start, 1, {start}, set())
        return best

    return tuple(through(i) for i in range(n))


def signature(h: Hypergraph) -> Signature:
    """Isomorphism-invariant fingerprint (necessary, not sufficient)."""
    deg = h.degrees
    return (
        h.vertex_count,
        h.edge_count,
        tuple(sorted(len(e) for e in h.edges)),
        tuple(sorted(deg.values())),
        tuple(sorted(_per_edge_loop_profile(h))),
        shortest_loop(h),
    )


def isomorphic(g: Hypergraph, h: Hypergraph) -> bool:
    """Exact hypergraph isomorphism by backtracking on vertex images."""
    if (
        g.vertex_count != h.vertex_count
        or g.edge_count != h.edge_count
        or sorted(len(e) for e in g.edges) != sorted(len(e) for e in h.edges)
    ):
        return False

    def profile(hg: Hypergraph) -> dict[str, tuple]:
        out = {}
        for v in hg.vertices:
            sizes = tuple(sorted(len(e) for e in hg.edges if v in set(e)))
            out[v] = (hg.degrees[v], sizes)
        return out

    gp, hp = profile(g), profile(h)
    if sorted(gp.values()) != sorted(hp.values()):
        return False
    g_edges = set(g.edge_sets())
    h_edges = set(h.edge_sets())
    # map rare-profile vertices first
    g_order = sorted(g.vertices, key=lambda v: (sum(1 for u in gp.values() if u == gp[v]), v))
    candidates = {v: [w for w in h.vertices if hp[w] == gp[v]] for v in g_order}
    g_adj = {v: set() for v in g.vertices}
    for e in g.edges:
        for v in e:
            g_adj[v].update(set(e) - {v})
    h_adj = {v: set() for v in h.vertices}
    for e in h.edges:
        for v in e:
            h_adj[v].update(set(e) - {v})
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str, w: str) -> bool:
        for u in g_adj[v]:
            if u in mapping and mapping[u] not in h_adj[w]:
                return False
        for u in set(g.vertices) - g_adj[v] - {v}:
            if u in mapping and mapping[u] in h_adj[w]:
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(g_order):
            mapped = {frozenset(mapping[v] for v in e) for e in g_edges}
            return mapped == h_edges
        v = g_order[i]
        for w in candidates[v]:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if rec(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return rec(0)


def _sample_seed(seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _strippable(h: Hypergraph) -> list[str]:
    """Degree-one vertices sitting in an edge that can spare them."""
    big = {v for e in h.edges if len(e) >= 3 for v in e}
    return [v for v, d in h.degrees.items() if d == 1 and v in big]


def _strip_one(h: Hypergraph, victim: str) -> Hypergraph:
    edges = tuple(
        tuple(v for v in e if v != victim) if victim in e else e for e in h.edges
    )
    return Hypergraph(edges, h.dimension)


def explore_critical(
    h: Hypergraph, rng: random.Random, strip_vertices: bool = False, strip_prob: float = 0.5
) -> Hypergraph:
    """One randomized walk from a non-binary set down to a critical one.

    Half of the walks sweep edges in plain shuffled order; the other half
    prefer removals that orphan no vertices, which is how the large criticals
    arise (as many vertices as the master, several edges fewer).
    """
    edges = list(h.edges)
    dim = h.dimension
    if rng.random() < 0.5:
        # vertex-preserving phase: only removals that orphan nobody, so the
        # walk can settle on a critical keeping every vertex of the master
        while True:
            deg: dict[str, int] = {}
            for e in edges:
                for v in e:
                    deg[v] = deg.get(v, 0) + 1
            order = [
                i for i, e in enumerate(edges) if all(deg[v] > 1 for v in e)
            ]
            rng.shuffle(order)
            removed_any = False
            for i in order:
                trial = tuple(e for j, e in enumerate(edges) if j != i)
                if not decide_binary(Hypergraph(trial, dim)).is_binary:
                    edges = list(trial)
                    removed_any = True
                    break
            if not removed_any:
                break
    while True:
        acted = False
        if strip_vertices:
            cur = Hypergraph(tuple(edges), dim)
            targets = _strippable(cur)
            rng.shuffle(targets)
            for v in targets:
                if rng.random() < strip_prob:
                    # the host edge may have shrunk since targets were drawn
                    host = next(e for e in cur.edges if v in e)
                    if len(host) >= 3:
                        cur = _strip_one(cur, v)
                        acted = True
            edges = list(cur.edges)
        order = list(range(len(edges)))
        rng.shuffle(order)
        removed: set[int] = set()
        for i in order:
            trial = tuple(e for j, e in enumerate(edges) if j != i and j not in removed)
            if trial and not decide_binary(Hypergraph(trial, dim)).is_binary:
                removed.add(i)
        if removed:
            acted = True
            edges = [e for j, e in enumerate(edges) if j not in removed]
        if not acted:
            return Hypergraph(tuple(edges), dim)


def _worker(args: tuple[str, int, int, int, int, bool]) -> list[str]:
    text, dimension, seed, start, count, strip = args
    master = parse_mmph(text, dimension)
    out = []
    for i in range(start, start + count):
        rng = random.Random(_sample_seed(seed, i))
        crit = explore_critical(master, rng, strip_vertices=strip)
        out.append(serialize_mmph(crit))
    return out


def enumerate_criticals(
    master: Hypergraph,
    samples: int,
    seed: int,
    strip_vertices: bool = False,
    jobs: int = 1,
) -> list[tuple[Hypergraph, Signature]]:
    """Sample critical sets and return the distinct ones with signatures.

    Deterministic for fixed (master, samples, seed) whatever ``jobs`` is:
    per-sample seeds are derived by hashing, samples are merged in index
    order, and deduplication keeps first representatives (signature match is
    confirmed by exact isomorphism for k <= 40 before discarding a sample).
    """
    if decide_binary(master).is_binary:
        raise PreconditionError("master must be non-binary")
    text = serialize_mmph(master)
    if jobs <= 1 or samples < 2:
        strings = _worker((text, master.dimension, seed, 0, samples, strip_vertices))
    else:
        chunk = max(1, (samples + jobs * 4 - 1) // (jobs * 4))
        tasks = [
            (text, master.dimension, seed, start, min(chunk, samples - start), strip_vertices)
            for start in range(0, samples, chunk)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            strings = [s for part in pool.map(_worker, tasks) for s in part]
    distinct: list[tuple[Hypergraph, Signature]] = []
    by_sig: dict[Signature, list[Hypergraph]] = {}
    for s in strings:
        cand = parse_mmph(s, master.dimension)
        sig = signature(cand)
        bucket = by_sig.setdefault(sig, [])
        if any(
            cand.same_edge_sets(rep)
            or (cand.vertex_count <= 40 and isomorphic(cand, rep))
            for rep in bucket
        ):
            continue
        bucket.append(cand)
        distinct.append((cand, sig))
    return distinct


def _sample_long_loops(
    h: Hypergraph, rng: random.Random, want: int, min_length: int, node_budget: int
) -> list[tuple[int, ...]]:
    """Seeded search for distinct long chordless loops (edge-index tuples)."""
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
    found: dict[frozenset[int], tuple[int, ...]] = {}
    nodes = 0

    def dfs(start: int, cur: int, path: list[int], union: set[str], connectors: set[str]):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget or len(found) >= want:
            return
        options = nbrs[cur][:]
        rng.shuffle(options)
        for nxt in options:
            if nxt == start or nxt in path:
                continue
            link = shared[cur, nxt]
            if len(link) != 1:
                continue
            (v,) = link
            if v in connectors:
                continue
            overlap = esets[nxt] & union
            if len(path) + 1 >= max(3, min_length):
                closing = shared.get((nxt, start))
                if closing is not None and len(closing) == 1:
                    (w,) = closing
                    if w != v and w not in connectors and overlap == {v, w}:
                        key = frozenset(path + [nxt])
                        if key not in found:
                            found[key] = tuple(path + [nxt])
                            if len(found) >= want:
                                return
            if overlap == {v}:
                path.append(nxt)
                dfs(start, nxt, path, union | esets[nxt], connectors | {v})
                path.pop()

    starts = list(range(n))
    rng.shuffle(starts)
    for s in starts:
        if len(found) >= want or nodes > node_budget:
            break
        dfs(s, s, [s], set(esets[s]), set())
    return sorted(found.values(), key=len, reverse=True)


def find_large_critical(
    master: Hypergraph,
    min_vertices: int,
    seed: int,
    loops_to_try: int = 24,
    sweeps_per_loop: int = 600,
    min_loop_length: int = 16,
) -> Hypergraph | None:
    """Search for a critical subset keeping at least ``min_vertices`` vertices.

    Large criticals are organized around long chordless loops, so plain
    random reduction practically never lands on them.  This search pins a
    sampled long loop and runs seeded deletion sweeps over the remaining
    edges: each sweep drops removable non-loop edges in random order until
    none is removable, then keeps the result only if it is critical outright.
    Deterministic for fixed (master, seed); returns ``None`` when the budget
    is exhausted.
    """
    if decide_binary(master).is_binary:
        raise PreconditionError("master must be non-binary")
    all_edges = list(master.edges)
    n = len(all_edges)
    rng = random.Random(_sample_seed(seed, 0))
    loops = _sample_long_loops(
        master, rng, want=loops_to_try, min_length=min_loop_length, node_budget=400_000
    )
    cache: dict[tuple[int, ...], bool] = {}

    def nonbinary(kept: tuple[int, ...]) -> bool:
        result = cache.get(kept)
        if result is None:
            sub = Hypergraph(tuple(all_edges[i] for i in kept), master.dimension)
            result = not decide_binary(sub).is_binary
            cache[kept] = result
        return result

    batch = 60
    tails_of = {loop: [i for i in range(n) if i not in set(loop)] for loop in loops}
    # round-robin over the sampled loops so one barren family cannot starve
    # the others
    for _round in range(0, sweeps_per_loop, batch):
        for loop in loops:
            base_tails = tails_of[loop]
            for _sweep in range(batch):
                tails = base_tails[:]
                rng.shuffle(tails)
                kept = tuple(range(n))
                for t in tails:
                    trial = tuple(j for j in kept if j != t)
                    if nonbinary(trial):
                        kept = trial
                if any(nonbinary(tuple(j for j in kept if j != i)) for i in kept):
                    continue  # minimal over the tails but not critical outright
                result = Hypergraph(
                    tuple(all_edges[i] for i in kept), master.dimension
                )
                if result.vertex_count >= min_vertices:
                    return result
    return None


@dataclass(frozen=True)
class DistributionRecord:
    k: int
    l: int
    count: int


def distribution(results: list[tuple[Hypergraph, Signature]]) -> list[DistributionRecord]:
    """(k, l)-binned counts of distinct criticals, sorted by k then l."""
    bins: dict[tuple[int, int], int] = {}
    for h, _sig in results:
        key = (h.vertex_count, h.edge_count)
        bins[key] = bins.get(key, 0) + 1
    return [
        DistributionRecord(k, l, bins[k, l]) for k, l in sorted(bins)
    ]


def distribution_csv(records: list[DistributionRecord]) -> str:
    lines = ["k,l,count"]
    lines += [f"{r.k},{r.l},{r.count}" for r in records]
    return "\n".join(lines) + "\n"
