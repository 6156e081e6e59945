from __future__ import annotations

import random

from mmph import Hypergraph, validate


def random_hypergraph(
    rng: random.Random, max_vertices: int = 12, max_edges: int = 10
) -> Hypergraph:
    """A valid-by-construction random set: sizes 2-3, pairwise overlap <= 1."""
    n_edges = rng.randint(1, max_edges)
    edges: list[tuple[str, ...]] = []
    labels = [chr(ord("A") + i) for i in range(26)] + [
        chr(ord("a") + i) for i in range(26)
    ] + [str(d) for d in range(1, 10)]
    pool: list[str] = []

    def next_label() -> str:
        lbl = labels[len(pool)]
        pool.append(lbl)
        return lbl

    for _ in range(n_edges):
        size = rng.choice((2, 3))
        for _attempt in range(40):
            reuse = [v for v in pool if rng.random() < 0.5]
            rng.shuffle(reuse)
            cand = reuse[: rng.randint(0, min(size, len(reuse)))]
            while len(cand) < size:
                if len(pool) >= max_vertices:
                    break
                cand.append(next_label())
            if len(cand) != size:
                continue
            cset = set(cand)
            if any(len(cset & set(e)) > 1 or cset == set(e) for e in edges):
                continue
            edges.append(tuple(cand))
            break
    if not edges:
        edges = [("A", "B")]
    h = Hypergraph(tuple(edges))
    assert not validate(h)
    return h
