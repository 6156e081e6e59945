import random

import pytest

from mmph import (
    PreconditionError,
    decide_binary,
    decide_critical,
    distribution,
    distribution_csv,
    enumerate_criticals,
    explore_critical,
    isomorphic,
    parse_mmph,
    signature,
)
from mmph.corpus import get

PENTAGON = parse_mmph("12,23,34,45,51.")


def test_signature_invariant_under_relabeling():
    a = parse_mmph("12,23,34,45,51.")
    b = parse_mmph("AB,BC,CD,DE,EA.")
    assert signature(a) == signature(b)
    assert isomorphic(a, b)


def test_signature_separates_different_sets():
    a = parse_mmph("12,23,34,45,51.")
    b = parse_mmph("12,23,34,45,56,61.")
    assert signature(a) != signature(b)
    assert not isomorphic(a, b)


def test_isomorphic_catches_same_degrees_different_wiring():
    # same degree sequence and edge sizes, different loop structure
    a = parse_mmph("12,23,34,45,56,61,17,47.", strict=False)
    b = parse_mmph("12,23,34,45,56,61,14,25.", strict=False)
    assert not isomorphic(a, b)


def test_isomorphism_on_appendix_relabelings():
    entry = get("ck-8gon-15-11")
    h = entry.hypergraph()
    mapping = dict(
        zip(h.vertices, "abcdefghijklmnopqrstuvwxyz"[: h.vertex_count])
    )
    relabeled = parse_mmph(
        ",".join("".join(mapping[v] for v in e) for e in h.edges) + "."
    )
    assert isomorphic(h, relabeled)
    assert signature(h) == signature(relabeled)


def test_enumerate_requires_non_binary():
    with pytest.raises(PreconditionError):
        enumerate_criticals(parse_mmph("123."), samples=1, seed=0)


def test_critical_master_reduces_to_itself():
    results = enumerate_criticals(PENTAGON, samples=3, seed=9)
    assert len(results) == 1
    assert results[0][0].same_edge_sets(PENTAGON)


def test_samples_are_verified_criticals():
    master = get("bub-33-36").hypergraph()
    results = enumerate_criticals(master, samples=12, seed=3)
    assert results
    for h, sig in results:
        assert signature(h) == sig
        assert not decide_binary(h).is_binary
        assert decide_critical(h).is_critical


def test_explore_with_stripping_stays_sound():
    master = get("bub-33-36").hypergraph()
    for seed in range(4):
        crit = explore_critical(
            master, random.Random(seed), strip_vertices=True
        )
        assert not decide_binary(crit).is_binary
        assert decide_critical(crit).is_critical


def test_determinism_and_seed_sensitivity():
    master = get("bub-33-36").hypergraph()
    a = enumerate_criticals(master, samples=10, seed=4, strip_vertices=True)
    b = enumerate_criticals(master, samples=10, seed=4, strip_vertices=True)
    assert [x.edges for x, _ in a] == [y.edges for y, _ in b]
    c = enumerate_criticals(master, samples=10, seed=5, strip_vertices=True)
    assert [x.edges for x, _ in a] != [y.edges for y, _ in c]


def test_distribution_rows():
    assert distribution([]) == []
    master = get("bub-33-36").hypergraph()
    results = enumerate_criticals(master, samples=15, seed=1)
    records = distribution(results)
    assert sum(r.count for r in records) == len(results)
    assert all(r.k <= 33 and r.l <= 36 for r in records)
    assert records == sorted(records, key=lambda r: (r.k, r.l))
    csv_text = distribution_csv(records)
    assert csv_text.startswith("k,l,count\n")
    assert len(csv_text.strip().splitlines()) == len(records) + 1


def test_catalogue_entries_have_distinct_signatures():
    ids = [
        "bub-10gon-18-13",
        "bub-11gon-21-16",
        "bub-14gon-24-18",
        "bub-13gon-27-20",
        "bub-17gon-30-23",
        "bub-17gon-33-26",
    ]
    sigs = [signature(get(i).hypergraph()) for i in ids]
    assert len(set(sigs)) == len(sigs)
    records = distribution(
        [(get(i).hypergraph(), s) for i, s in zip(ids, sigs)]
    )
    assert all(r.count == 1 for r in records)
