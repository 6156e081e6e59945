import random

import pytest
from hypothesis import given, settings, strategies as st

from mmph import (
    PreconditionError,
    brute_force_admissible_max,
    brute_force_binary,
    brute_force_classical_index,
    admissible_max,
    classical_index,
    critical_reduce,
    decide_binary,
    decide_critical,
    has_parity_proof,
    is_admissible,
    is_satisfying,
    parse_mmph,
    serialize_mmph,
    strip_degree_one,
    strip_vertices,
)
from mmph.corpus import get

from .util import random_hypergraph

PENTAGON = parse_mmph("12,23,34,45,51.")


def test_single_edge_binary():
    verdict = decide_binary(parse_mmph("123."))
    assert verdict.is_binary
    assert sum(verdict.witness.values()) == 1


def test_pentagon_non_binary():
    assert not decide_binary(PENTAGON).is_binary


def test_square_binary():
    verdict = decide_binary(parse_mmph("12,23,34,41."))
    assert verdict.is_binary
    assert verdict.witness["1"] != verdict.witness["2"]


def test_yu_oh_non_binary_filled_binary():
    assert not decide_binary(get("yu-oh-13-16").hypergraph()).is_binary
    assert decide_binary(get("yu-oh-25-16").hypergraph()).is_binary


def test_peres_57_40_non_binary():
    assert not decide_binary(get("peres-57-40").hypergraph()).is_binary


def test_bub_10_9_non_binary():
    assert not decide_binary(parse_mmph("12,23,34,456,67,78,89,9A1,A5.")).is_binary


def test_witness_satisfies():
    h = get("yu-oh-25-16").hypergraph()
    verdict = decide_binary(h)
    assert is_satisfying(h, verdict.witness)
    assert is_admissible(h, verdict.witness)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_decide_binary_matches_brute_force(seed):
    h = random_hypergraph(random.Random(seed))
    assert decide_binary(h).is_binary == brute_force_binary(h).is_binary


def test_brute_force_size_limit():
    with pytest.raises(PreconditionError):
        brute_force_binary(get("yu-oh-25-16").hypergraph(), limit=20)


# --- classical index -------------------------------------------------------


def test_classical_index_examples():
    assert classical_index(PENTAGON) == 2
    assert classical_index(get("yu-oh-13-16").hypergraph()) == 4
    assert classical_index(get("yu-oh-25-16").hypergraph()) == 11
    assert classical_index(get("ck-12-10").hypergraph()) == 4


def test_classical_index_undefined_for_blocked_triplets():
    # none of this set's full edges can all be hit exactly once
    assert classical_index(get("peres-33-40").hypergraph()) is None
    assert classical_index(get("conway-kochen-31-37").hypergraph()) is None


def test_admissible_max_relaxes_classical_index():
    h = get("yu-oh-13-16").hypergraph()
    assert admissible_max(h) == 5  # exceeds the full-context value 4


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_classical_index_matches_brute_force(seed):
    h = random_hypergraph(random.Random(seed))
    assert classical_index(h) == brute_force_classical_index(h)
    assert admissible_max(h) == brute_force_admissible_max(h)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_classical_index_bounds_and_monotonicity(seed):
    h = random_hypergraph(random.Random(seed))
    hic = classical_index(h)
    if hic is None:
        return
    assert hic <= min(h.vertex_count, h.edge_count)
    verdict = decide_binary(h)
    if verdict.is_binary:
        assert hic >= sum(verdict.witness.values())
    if h.edge_count > 1:
        i = seed % h.edge_count
        reduced = h.without_edge(i)
        # removal drops vertices living only in edge i, and their 1s with them
        orphans = h.vertex_count - reduced.vertex_count
        less = classical_index(reduced)
        assert less is not None and less >= hic - orphans


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_classical_index_vertex_removal_drops_by_at_most_one(seed):
    rng = random.Random(seed)
    h = random_hypergraph(rng)
    hic = classical_index(h)
    if hic is None:
        return
    victim = rng.choice(h.vertices)
    if any(len(e) == 2 and victim in e for e in h.edges):
        return  # deletion would underflow a doublet
    reduced = strip_vertices(h, [victim], force=True)
    less = classical_index(reduced)
    assert less is not None and less >= hic - 1


# --- criticality -----------------------------------------------------------


def test_pentagon_critical_by_brute_force():
    verdict = decide_critical(PENTAGON)
    assert verdict.is_critical
    for i in range(PENTAGON.edge_count):
        assert brute_force_binary(PENTAGON.without_edge(i)).is_binary


def test_critical_verdict_surviving_edges():
    h = get("bub-33-36").hypergraph()
    verdict = decide_critical(h)
    assert not verdict.is_critical
    for i in verdict.surviving_edges[:3]:
        assert not decide_binary(h.without_edge(i)).is_binary


def test_decide_critical_requires_non_binary():
    with pytest.raises(PreconditionError):
        decide_critical(parse_mmph("123."))


def test_critical_reduce_fixed_point():
    assert critical_reduce(PENTAGON, seed=7).edges == PENTAGON.edges


def test_critical_reduce_produces_critical():
    h = get("bub-33-36").hypergraph()
    for seed in (0, 1, 2):
        reduced = critical_reduce(h, seed=seed)
        assert reduced.edge_count <= h.edge_count
        assert decide_critical(reduced).is_critical
        # standard subgraph: every remaining edge is an edge of the master
        master_edges = set(h.edge_sets())
        assert all(frozenset(e) in master_edges for e in reduced.edges)


# --- parity ----------------------------------------------------------------


@pytest.mark.parametrize(
    "text,expected",
    [
        ("12,23,34,45,51.", True),
        ("12,23,34,456,67,78,89,9A1,A5.", True),
        ("12,234,56,678,89,9A,ABC,CD,D1,35,4B7.", True),
        ("123.", False),
    ],
)
def test_parity_examples(text, expected):
    assert has_parity_proof(parse_mmph(text)) == expected


def test_parity_false_for_35_25a():
    assert not has_parity_proof(get("ks-35-25a").hypergraph())


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_parity_implies_non_binary(seed):
    h = random_hypergraph(random.Random(seed))
    if has_parity_proof(h):
        assert not decide_binary(h).is_binary


# --- stripping -------------------------------------------------------------


def test_strip_peres_57_40():
    stripped = strip_degree_one(get("peres-57-40").hypergraph())
    assert stripped.name == "33-40"


def test_strip_alt_listing_reproduces_33_40():
    stripped = strip_degree_one(get("peres-57-40-alt").hypergraph())
    assert serialize_mmph(stripped) == get("peres-33-40").mmph


def test_strip_yu_oh_reproduces_13_16():
    stripped = strip_degree_one(get("yu-oh-25-16").hypergraph())
    assert serialize_mmph(stripped) == get("yu-oh-13-16").mmph


def test_strip_ks_192_round_trip():
    assert serialize_mmph(strip_degree_one(get("ks-192-118").hypergraph())) == get(
        "ks-117-118"
    ).mmph


def test_strip_underflow():
    with pytest.raises(PreconditionError):
        strip_degree_one(parse_mmph("12,23."))


def test_strip_vertices_degree_guard():
    with pytest.raises(PreconditionError):
        strip_vertices(PENTAGON, ["3"])
    reduced = strip_vertices(get("ck-13-10").hypergraph(), ["D"])
    assert reduced.name == "12-10"
    assert decide_critical(reduced).is_critical


def test_strip_vertices_unknown_label():
    with pytest.raises(PreconditionError, match="unknown"):
        strip_vertices(PENTAGON, ["Z"])
