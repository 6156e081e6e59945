import random

import pytest
from hypothesis import given, settings, strategies as st

from mmph import (
    ALPHABET,
    ParseError,
    ValidationError,
    label_rank,
    parse_coordinates,
    parse_mmph,
    rank_label,
    serialize_coordinates,
    serialize_mmph,
    validate,
)
from mmph.corpus import corpus

from .util import random_hypergraph


def test_alphabet_layout():
    assert len(ALPHABET) == 90
    assert ALPHABET[0] == "1" and ALPHABET[8] == "9"
    assert ALPHABET[9] == "A" and ALPHABET[34] == "Z"
    assert ALPHABET[35] == "a" and ALPHABET[60] == "z"
    assert ALPHABET[89] == "~"
    assert "0" not in ALPHABET
    for structural in ",.+":
        assert structural not in ALPHABET


@given(st.integers(min_value=0, max_value=10_000))
def test_label_round_trip(rank):
    assert label_rank(rank_label(rank)) == rank


def test_plus_prefixing():
    assert rank_label(89) == "~"
    assert rank_label(90) == "+1"
    assert rank_label(91) == "+2"
    assert rank_label(180) == "++1"


def test_parse_simple():
    h = parse_mmph("123,345,561.")
    assert h.vertex_count == 6 and h.edge_count == 3
    assert h.vertices == ("1", "2", "3", "4", "5", "6")


def test_parse_pentagon():
    h = parse_mmph("12,23,34,45,51.")
    assert h.name == "5-5"


def test_parse_plus_labels():
    h = parse_mmph("~+1,+1+2.")
    assert h.edges == (("~", "+1"), ("+1", "+2"))
    assert [label_rank(v) for v in h.vertices] == [89, 90, 91]


def test_parse_ignores_whitespace():
    a = parse_mmph("12,23,\n  34,45,51 .")
    assert serialize_mmph(a) == "12,23,34,45,51."


def test_parse_rejects_order_two_loop():
    with pytest.raises(ValidationError):
        parse_mmph("12,21.")
    h = parse_mmph("12,21.", strict=False)
    assert any(v.rule == "duplicate-edge" for v in validate(h))


def test_validate_shared_pair():
    h = parse_mmph("123,124.", strict=False)
    violations = validate(h)
    assert any(v.rule == "overlap" and set(v.vertices) == {"1", "2"} for v in violations)


def test_doublet_triangle_is_structurally_legal():
    assert validate(parse_mmph("12,23,31.")) == []


def test_yu_oh_validates():
    assert validate(parse_mmph("13,35,57,79,9AB,BD,DF,FH,H1,1JK,KLA,5LF,JD,J7,3B,H9.")) == []


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("12,23", "terminator"),
        ("12,,23.", "empty edge"),
        ("120.", "outside the label alphabet"),
        ("1+,2.", "dangling '+'"),
        ("121.", "repeated within an edge"),
        ("12. 34.", "after '.'"),
    ],
)
def test_parse_errors_carry_offsets(text, fragment):
    with pytest.raises(ParseError) as info:
        parse_mmph(text)
    diag = info.value.diagnostics[0]
    assert fragment in diag.message
    assert 0 <= diag.position <= len(text)


def test_empty_hypergraph_round_trips():
    h = parse_mmph(".")
    assert h.vertex_count == 0 and h.edge_count == 0
    assert serialize_mmph(h) == "."


def test_corpus_round_trips_byte_for_byte():
    for entry in corpus().values():
        if entry.mmph is None:
            continue
        h = entry.hypergraph()
        assert serialize_mmph(h) == entry.mmph, entry.id


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_fuzz_round_trip(seed):
    h = random_hypergraph(random.Random(seed), max_vertices=60, max_edges=50)
    again = parse_mmph(serialize_mmph(h))
    assert again.edges == h.edges
    assert validate(again) == []


def test_coordinates_round_trip():
    text = "9={0,0,1}\n1={1,r2,-1}\nX={1,-1/2,2*r2}\n"
    coords = parse_coordinates(text)
    assert len(coords) == 3
    assert serialize_coordinates(coords) == text


def test_coordinates_accept_comma_separated():
    coords = parse_coordinates("1={1,r2,-1},3={0,1,r2}")
    assert set(coords) == {"1", "3"}


def test_coordinates_reject_zero_vector():
    with pytest.raises(ParseError, match="zero vector"):
        parse_coordinates("X={0,0,0}")


def test_coordinates_reject_malformed():
    with pytest.raises(ParseError):
        parse_coordinates("X={1,2}")
    with pytest.raises(ParseError):
        parse_coordinates("X={1,sqrt,3}")
