"""Exact 0/1-assignment solvers.

A set is *binary* when its vertices admit a 0/1 assignment giving every edge
exactly one 1 (at most one 1 per edge, and no edge all zero).  The classical
index is the largest number of 1s an assignment can carry while keeping at
most one 1 per edge and exactly one 1 per full-size edge; sets whose
full-size edges cannot all be hit at once have no such assignment and the
index is undefined (``None``).

All solvers are exact backtrackers over bitmask state with unit propagation;
the ``brute_force_*`` variants scan all 2^k assignments and exist purely as
independent oracles for the tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .hypergraph import Hypergraph, MmphError, PreconditionError, require_valid

Assignment = dict[str, int]

_CHUNK = 1 << 20


@dataclass(frozen=True)
class BinaryVerdict:
    is_binary: bool
    witness: Assignment | None

    def __post_init__(self) -> None:
        assert self.is_binary == (self.witness is not None)


@dataclass(frozen=True)
class CriticalityVerdict:
    is_critical: bool
    surviving_edges: tuple[int, ...]  # removals that keep the set non-binary


class _Indexed:
    """Bitmask view of a hypergraph: one bit per vertex."""

    __slots__ = ("verts", "index", "edge_masks", "full", "neighbors", "all_mask")

    def __init__(self, h: Hypergraph):
        self.verts = h.vertices
        self.index = {v: i for i, v in enumerate(self.verts)}
        self.edge_masks = [
            sum(1 << self.index[v] for v in e) for e in h.edges
        ]
        self.full = [len(e) == h.dimension for e in h.edges]
        nbr = [0] * len(self.verts)
        for m in self.edge_masks:
            mm = m
            while mm:
                bit = mm & -mm
                nbr[bit.bit_length() - 1] |= m & ~bit
                mm ^= bit
        self.neighbors = nbr
        self.all_mask = (1 << len(self.verts)) - 1


def is_admissible(h: Hypergraph, assignment: Assignment) -> bool:
    """At most one 1 inside every edge."""
    return all(sum(assignment.get(v, 0) for v in e) <= 1 for e in h.edges)


def is_satisfying(h: Hypergraph, assignment: Assignment) -> bool:
    """Exactly one 1 inside every edge."""
    return all(sum(assignment.get(v, 0) for v in e) == 1 for e in h.edges)


def decide_binary(h: Hypergraph) -> BinaryVerdict:
    """Decide binary vs non-binary by exact search with unit propagation.

    Degree-one vertices are eliminated up front: an edge containing one can
    always park its 1 there, so the edge only needs *at most* one 1 among its
    shared vertices, while edges of shared vertices alone need exactly one.
    The search then propagates (a 1 zeroes its edge-mates; an exact edge with
    a single candidate left forces it to 1) and branches on the exact edge
    with the fewest candidates, high-degree candidates first.
    """
    deg = h.degrees
    shared = [v for v in h.vertices if deg[v] > 1]
    index = {v: i for i, v in enumerate(shared)}
    exact_masks: list[int] = []
    relaxed_masks: list[int] = []
    for e in h.edges:
        mask = sum(1 << index[v] for v in e if deg[v] > 1)
        if len(e) == sum(1 for v in e if deg[v] > 1):
            exact_masks.append(mask)
        elif mask and mask & (mask - 1):
            relaxed_masks.append(mask)  # a lone shared vertex constrains nothing
    nbr = [0] * len(shared)
    for m in exact_masks + relaxed_masks:
        mm = m
        while mm:
            bit = mm & -mm
            nbr[bit.bit_length() - 1] |= m & ~bit
            mm ^= bit
    branch_degree = [bin(x).count("1") for x in nbr]

    def search(ones: int, zeros: int) -> int | None:
        while True:
            changed = False
            for m in relaxed_masks:
                sat = m & ones
                if sat and sat & (sat - 1):
                    return None
            for m in exact_masks:
                sat = m & ones
                if sat:
                    if sat & (sat - 1):
                        return None
                    continue
                cand = m & ~zeros
                if cand == 0:
                    return None
                if cand & (cand - 1) == 0:
                    v = cand.bit_length() - 1
                    ones |= cand
                    zeros |= nbr[v]
                    if ones & zeros:
                        return None
                    changed = True
            if not changed:
                break
        pick = None
        pick_n = 0
        for m in exact_masks:
            if m & ones:
                continue
            cand = m & ~zeros
            n = bin(cand).count("1")
            if pick is None or n < pick_n:
                pick, pick_n = cand, n
                if n == 2:
                    break
        if pick is None:
            return ones  # relaxed edges are content with all-zero remainders
        cands = []
        c = pick
        while c:
            bit = c & -c
            cands.append(bit)
            c ^= bit
        cands.sort(key=lambda b: -branch_degree[b.bit_length() - 1])
        for bit in cands:
            v = bit.bit_length() - 1
            result = search(ones | bit, zeros | nbr[v])
            if result is not None:
                return result
        return None

    ones = search(0, 0)
    if ones is None:
        return BinaryVerdict(False, None)
    witness = {v: (ones >> index[v]) & 1 if deg[v] > 1 else 0 for v in h.vertices}
    for e in h.edges:
        if not any(witness[v] for v in e):
            # park the edge's 1 on its first degree-one vertex
            free = next(v for v in e if deg[v] == 1)
            witness[free] = 1
    return BinaryVerdict(True, witness)


def _edge_arrays(ix: _Indexed) -> list[np.uint32]:
    return [np.uint32(m) for m in ix.edge_masks]


def brute_force_binary(h: Hypergraph, limit: int = 25) -> BinaryVerdict:
    """Oracle: scan all 2^k assignments for a satisfying one."""
    k = h.vertex_count
    if k > limit:
        raise PreconditionError(f"brute force supports at most {limit} vertices, got {k}")
    ix = _Indexed(h)
    emasks = _edge_arrays(ix)
    one = np.uint32(1)
    for start in range(0, 1 << k, _CHUNK):
        stop = min(start + _CHUNK, 1 << k)
        masks = np.arange(start, stop, dtype=np.uint32)
        ok = np.ones(stop - start, dtype=bool)
        for m in emasks:
            x = masks & m
            ok &= (x != 0) & ((x & (x - one)) == 0)
        hits = np.flatnonzero(ok)
        if hits.size:
            mask = int(masks[hits[0]])
            witness = {v: (mask >> i) & 1 for v, i in ix.index.items()}
            return BinaryVerdict(True, witness)
    return BinaryVerdict(False, None)


def _max_independent(avail: int, nbr: list[int], lower: int = 0) -> int:
    """Largest subset of ``avail`` with no two vertices sharing an edge."""
    best = lower

    def rec(avail: int, cur: int) -> None:
        nonlocal best
        while True:
            if cur + bin(avail).count("1") <= best:
                return
            reduced = False
            a = avail
            while a:
                bit = a & -a
                a ^= bit
                if not avail & bit:
                    continue
                d = nbr[bit.bit_length() - 1] & avail
                if d == 0:
                    avail ^= bit
                    cur += 1
                    reduced = True
                elif d & (d - 1) == 0:
                    avail &= ~(bit | d)
                    cur += 1
                    reduced = True
            if not reduced:
                break
        if avail == 0:
            if cur > best:
                best = cur
            return
        # bound: |avail| minus a greedy matching (every matched pair costs one)
        count = bin(avail).count("1")
        m = 0
        a = avail
        while a:
            bit = a & -a
            a ^= bit
            nb = nbr[bit.bit_length() - 1] & a
            if nb:
                a ^= nb & -nb
                m += 1
        if cur + count - m <= best:
            return
        vbest, dbest = -1, -1
        a = avail
        while a:
            bit = a & -a
            a ^= bit
            d = bin(nbr[bit.bit_length() - 1] & avail).count("1")
            if d > dbest:
                vbest, dbest = bit.bit_length() - 1, d
        rec(avail & ~((1 << vbest) | nbr[vbest]), cur + 1)
        rec(avail & ~(1 << vbest), cur)

    rec(avail, 0)
    return best


def admissible_max(h: Hypergraph) -> int:
    """Largest number of 1s under the at-most-one-per-edge rule alone.

    This is the independence number of the share-an-edge graph; it ignores
    the full-edge click requirement that :func:`classical_index` enforces.
    """
    ix = _Indexed(h)
    return _max_independent(ix.all_mask, ix.neighbors)


def classical_index(h: Hypergraph) -> int | None:
    """The classical hypergraph index.

    Maximum number of 1s over assignments with at most one 1 per edge and
    exactly one 1 per full-size edge; ``None`` when no assignment meets the
    full-size-edge requirement (then no classical full-context model exists
    at all).
    """
    ix = _Indexed(h)
    emasks = ix.edge_masks
    full = ix.full
    nbr = ix.neighbors
    all_mask = ix.all_mask
    best = -1

    def search(ones: int, zeros: int) -> None:
        nonlocal best
        while True:
            changed = False
            for m, f in zip(emasks, full):
                sat = m & ones
                if sat:
                    if sat & (sat - 1):
                        return
                    fresh = m & ~sat & ~zeros
                    if fresh:
                        zeros |= fresh
                        changed = True
                elif f:
                    cand = m & ~zeros
                    if cand == 0:
                        return
                    if cand & (cand - 1) == 0:
                        v = cand.bit_length() - 1
                        ones |= cand
                        zeros |= nbr[v]
                        if ones & zeros:
                            return
                        changed = True
            if not changed:
                break
        undecided = all_mask & ~ones & ~zeros
        ones_n = bin(ones).count("1")
        if ones_n + bin(undecided).count("1") <= best:
            return
        pick = None
        pick_n = 0
        for m, f in zip(emasks, full):
            if f and not m & ones:
                cand = m & ~zeros
                n = bin(cand).count("1")
                if pick is None or n < pick_n:
                    pick, pick_n = cand, n
        if pick is not None:
            c = pick
            while c:
                bit = c & -c
                v = bit.bit_length() - 1
                search(ones | bit, zeros | nbr[v])
                c ^= bit
            return
        # every full edge satisfied; the rest is an independence problem
        total = ones_n + _max_independent(undecided, nbr, lower=best - ones_n)
        if total > best:
            best = total

    search(0, 0)
    return best if best >= 0 else None


def brute_force_classical_index(h: Hypergraph, limit: int = 22) -> int | None:
    """Oracle: scan all 2^k assignments for the classical index."""
    k = h.vertex_count
    if k > limit:
        raise PreconditionError(f"brute force supports at most {limit} vertices, got {k}")
    ix = _Indexed(h)
    one = np.uint32(1)
    best = -1
    for start in range(0, 1 << k, _CHUNK):
        stop = min(start + _CHUNK, 1 << k)
        masks = np.arange(start, stop, dtype=np.uint32)
        ok = np.ones(stop - start, dtype=bool)
        for m, f in zip(ix.edge_masks, ix.full):
            x = masks & np.uint32(m)
            at_most_one = (x & (x - one)) == 0
            ok &= (at_most_one & (x != 0)) if f else at_most_one
        if ok.any():
            counts = np.bitwise_count(masks[ok])
            best = max(best, int(counts.max()))
    return best if best >= 0 else None


def brute_force_admissible_max(h: Hypergraph, limit: int = 22) -> int:
    """Oracle: scan all 2^k assignments for the at-most-one-per-edge maximum."""
    k = h.vertex_count
    if k > limit:
        raise PreconditionError(f"brute force supports at most {limit} vertices, got {k}")
    ix = _Indexed(h)
    one = np.uint32(1)
    best = 0
    for start in range(0, 1 << k, _CHUNK):
        stop = min(start + _CHUNK, 1 << k)
        masks = np.arange(start, stop, dtype=np.uint32)
        ok = np.ones(stop - start, dtype=bool)
        for m in ix.edge_masks:
            x = masks & np.uint32(m)
            ok &= (x & (x - one)) == 0
        if ok.any():
            best = max(best, int(np.bitwise_count(masks[ok]).max()))
    return best


def decide_critical(h: Hypergraph) -> CriticalityVerdict:
    """Check whether every single-edge removal turns the set binary.

    Removing an edge also drops vertices left in no edge at all, so each
    sub-decision runs on a well-formed set.
    """
    if decide_binary(h).is_binary:
        raise PreconditionError("criticality is defined for non-binary sets only")
    surviving = tuple(
        i
        for i in range(h.edge_count)
        if not decide_binary(h.without_edge(i)).is_binary
    )
    return CriticalityVerdict(not surviving, surviving)


def critical_reduce(h: Hypergraph, seed: int) -> Hypergraph:
    """Shrink a non-binary set to a critical one by seeded edge removals.

    Repeatedly sweeps the edges in a seeded random order, committing any
    single-edge removal that keeps the set non-binary, until a full sweep
    commits nothing; the result is critical by construction and a standard
    subgraph of the input.
    """
    if decide_binary(h).is_binary:
        raise PreconditionError("cannot reduce a binary set")
    rng = random.Random(seed)
    edges = list(h.edges)
    while True:
        order = list(range(len(edges)))
        rng.shuffle(order)
        removed: set[int] = set()
        for i in order:
            trial = tuple(e for j, e in enumerate(edges) if j != i and j not in removed)
            if trial and not decide_binary(Hypergraph(trial, h.dimension)).is_binary:
                removed.add(i)
        if not removed:
            return Hypergraph(tuple(edges), h.dimension)
        edges = [e for j, e in enumerate(edges) if j not in removed]


def has_parity_proof(h: Hypergraph) -> bool:
    """Parity certificate of non-binarity: odd edge count, all degrees even.

    A satisfying assignment would make the number of (edge, chosen-vertex)
    incidences both odd (one per edge) and even (each chosen vertex
    contributes its even degree), so none can exist.
    """
    if h.edge_count % 2 == 0:
        return False
    return all(d % 2 == 0 for d in h.degrees.values())


def strip_degree_one(h: Hypergraph) -> Hypergraph:
    """Remove every vertex that lies in exactly one edge (single pass)."""
    deg = h.degrees
    edges = []
    for i, e in enumerate(h.edges):
        kept = tuple(v for v in e if deg[v] > 1)
        if len(kept) < 2:
            raise PreconditionError(
                f"stripping would shrink edge {i} ({''.join(e)}) below 2 vertices"
            )
        edges.append(kept)
    return Hypergraph(tuple(edges), h.dimension)


def strip_vertices(
    h: Hypergraph, victims: set[str] | list[str], force: bool = False
) -> Hypergraph:
    """Delete the given vertices from every edge containing them.

    Without ``force`` each victim must have degree 1 (the safe reduction);
    ``force`` permits deleting shared vertices, which builds the more general
    vertex-deleted subgraphs.  The result is revalidated.
    """
    victims = set(victims)
    unknown = victims - set(h.vertices)
    if unknown:
        raise PreconditionError(f"unknown labels: {sorted(unknown)}")
    if not force:
        shared = [v for v in victims if h.degrees[v] != 1]
        if shared:
            raise PreconditionError(
                f"vertices {sorted(shared)} are shared; pass force=True to delete them"
            )
    edges = []
    for i, e in enumerate(h.edges):
        kept = tuple(v for v in e if v not in victims)
        if len(kept) < 2:
            raise PreconditionError(
                f"deleting {sorted(victims)} shrinks edge {i} ({''.join(e)}) below 2 vertices"
            )
        edges.append(kept)
    return require_valid(Hypergraph(tuple(edges), h.dimension))
