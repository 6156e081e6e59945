from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mmph import QSqrt2, SQRT2, format_q2, parse_q2

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=12
)
values = st.builds(QSqrt2, rationals, rationals)


@given(values, values, values)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@given(values)
def test_inverse(x):
    if x:
        assert x * x.inverse() == QSqrt2(1)
    else:
        with pytest.raises(ZeroDivisionError):
            x.inverse()


@given(values)
def test_sign_matches_float(x):
    approx = float(x)
    if abs(approx) > 1e-9:
        assert x.sign() == (1 if approx > 0 else -1)


def test_sign_exact_close_calls():
    # 99/70 is a convergent of sqrt(2): 99/70 - r2 is tiny but positive
    assert (QSqrt2(Fraction(99, 70)) - SQRT2).sign() == 1
    assert (QSqrt2(Fraction(140, 99)) - SQRT2).sign() == -1
    assert QSqrt2(0, 0).sign() == 0


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == QSqrt2(2)


@given(values)
def test_format_parse_round_trip(x):
    assert parse_q2(format_q2(x)) == x


@pytest.mark.parametrize(
    "text,value",
    [
        ("0", QSqrt2(0)),
        ("-3", QSqrt2(-3)),
        ("1/2", QSqrt2(Fraction(1, 2))),
        ("r2", SQRT2),
        ("-r2", -SQRT2),
        ("2*r2", QSqrt2(0, 2)),
        ("1+r2", QSqrt2(1, 1)),
        ("1-1/2*r2", QSqrt2(1, Fraction(-1, 2))),
    ],
)
def test_parse_examples(text, value):
    assert parse_q2(text) == value


@pytest.mark.parametrize("bad", ["", "x", "1+", "r3", "1//2", "++1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_q2(bad)


def test_ordering():
    assert QSqrt2(1) < SQRT2 < QSqrt2(2) < QSqrt2(0, 2)
