from fractions import Fraction

import pytest

from mmph import (
    decide_binary,
    decide_critical,
    format_q2,
    has_parity_proof,
    index_report,
    largest_loop,
    operator_report,
    serialize_mmph,
    shortest_loop,
    validate,
)
from mmph.corpus import corpus, get, ids

REQUIRED_IDS = [
    "peres-57-40",
    "peres-33-40",
    "peres-40-40",
    "bub-49-36",
    "bub-33-36",
    "conway-kochen-31-37",
    "ks-117-118",
    "yu-oh-13-16",
    "yu-oh-25-16",
    "pentagon-5-5",
    "pentagon-10-5",
    "bub-10-9",
    "bub-14-13",
    "peres-13-11",
    "ck-13-10",
    "ks-35-25a",
    "ks-35-25b",
    "ks-hexagon-8-7",
]


def test_corpus_is_large_enough():
    assert len(ids()) >= 40
    for required in REQUIRED_IDS:
        assert required in ids()


def test_every_entry_parses_and_validates():
    for entry in corpus().values():
        if entry.mmph is None:
            continue
        h = entry.hypergraph()
        assert validate(h) == [], entry.id
        assert serialize_mmph(h) == entry.mmph, entry.id


def test_reconstructed_fillings_are_all_triplets():
    for entry_id in ("bub-49-36", "ck-51-37", "ks-192-118"):
        entry = get(entry_id)
        assert entry.reconstructed
        assert all(len(e) == 3 for e in entry.hypergraph().edges)


ENTRIES_WITH_EXPECTATIONS = [
    e.id for e in corpus().values() if e.expected and e.mmph is not None
]


@pytest.mark.parametrize("entry_id", ENTRIES_WITH_EXPECTATIONS)
def test_expected_values(entry_id):
    entry = get(entry_id)
    expected = entry.expected
    h = entry.hypergraph()
    mismatches = []

    def check(key, actual):
        if key in expected and expected[key] != actual:
            mismatches.append(f"{key}: expected {expected[key]!r}, got {actual!r}")

    check("k", h.vertex_count)
    check("l", h.edge_count)
    verdict = decide_binary(h)
    check("binary", verdict.is_binary)
    check("parity", has_parity_proof(h))
    if "critical" in expected and not verdict.is_binary:
        check("critical", decide_critical(h).is_critical)
    if {"hi_c", "hi_q", "hi_q_unc", "admissible_max"} & set(expected):
        rep = index_report(h)
        check("hi_c", rep.hi_c)
        check("admissible_max", rep.admissible_max)
        if "hi_q" in expected:
            check("hi_q", str(rep.hi_q))
        if "hi_q_unc" in expected:
            check("hi_q_unc", str(rep.hi_q_unc))
    if "shortest_loop" in expected:
        check("shortest_loop", shortest_loop(h))
    if "largest_loop" in expected:
        result = largest_loop(h)
        assert result.exact
        check("largest_loop", result.order)
    if {"operator_scalar", "max_classical", "operator_verdict", "orthogonal_pairs"} & set(
        expected
    ):
        coords = entry.coordinatization()
        assert coords is not None, f"{entry_id}: operator expectations need coordinates"
        rep = operator_report(coords, list(h.vertices))
        scalar = format_q2(rep.scalar_value) if rep.scalar_value is not None else None
        check("operator_scalar", scalar)
        if "max_classical" in expected:
            check("max_classical", str(rep.max_classical))
        check("operator_verdict", rep.verdict)
        check("orthogonal_pairs", rep.orthogonal_pairs)
    assert not mismatches, f"{entry_id}: " + "; ".join(mismatches)


def test_rays_only_entry():
    entry = get("bub-14-11")
    assert entry.mmph is None
    coords = entry.coordinatization()
    assert len(coords) == 14
    rep = operator_report(coords, sorted(coords))
    assert format_q2(rep.scalar_value) == entry.expected["operator_scalar"]
    assert str(rep.max_classical) == entry.expected["max_classical"]
