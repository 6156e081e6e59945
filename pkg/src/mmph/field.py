"""Exact arithmetic in the real quadratic field Q(sqrt 2)."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, "QSqrt2"]


class QSqrt2:
    """A number a + b*sqrt(2) with rational a, b; all arithmetic is exact."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        object.__setattr__(self, "_a", Fraction(a))
        object.__setattr__(self, "_b", Fraction(b))

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QSqrt2 is immutable")

    def __repr__(self) -> str:
        return f"QSqrt2({self._a!r}, {self._b!r})"

    def __str__(self) -> str:
        return format_q2(self)

    @classmethod
    def _coerce(cls, x: Scalar) -> QSqrt2 | None:
        if isinstance(x, QSqrt2):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other) if isinstance(other, (int, Fraction, QSqrt2)) else None
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __neg__(self) -> QSqrt2:
        return QSqrt2(-self._a, -self._b)

    def __add__(self, other: Scalar) -> QSqrt2:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> QSqrt2:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: Scalar) -> QSqrt2:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Scalar) -> QSqrt2:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(
            self._a * o._a + 2 * self._b * o._b,
            self._a * o._b + self._b * o._a,
        )

    __rmul__ = __mul__

    def inverse(self) -> QSqrt2:
        # 1/(a+b*r2) = (a-b*r2)/(a^2-2b^2); the norm vanishes only at zero
        # because sqrt(2) is irrational.
        norm = self._a * self._a - 2 * self._b * self._b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        return QSqrt2(self._a / norm, -self._b / norm)

    def __truediv__(self, other: Scalar) -> QSqrt2:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> QSqrt2:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(2), computed without radicals."""
        a, b = self._a, self._b
        if b == 0:
            return 0 if a == 0 else (1 if a > 0 else -1)
        if a == 0:
            return 1 if b > 0 else -1
        sa = 1 if a > 0 else -1
        sb = 1 if b > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: compare |a| with |b|*sqrt(2) via squares
        return sa if a * a > 2 * b * b else sb

    def __lt__(self, other: Scalar) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other: Scalar) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other: Scalar) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other: Scalar) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def is_rational(self) -> bool:
        return self._b == 0

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * 1.4142135623730951


ZERO = QSqrt2(0)
ONE = QSqrt2(1)
SQRT2 = QSqrt2(0, 1)


_TERM_RE = re.compile(
    r"^(?P<sign>[+-]?)(?:(?P<coef>\d+(?:/\d+)?)\*?)?(?P<r2>r2)?$"
)


def parse_q2(text: str) -> QSqrt2:
    """Parse an exact value like ``2``, ``-1/3``, ``r2``, ``2*r2`` or ``1-1/2*r2``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty numeric literal")
    # split into terms at '+'/'-' not inside a fraction (fractions never
    # carry an inner sign after normalisation below)
    terms: list[str] = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-/*":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    a = Fraction(0)
    b = Fraction(0)
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coef") is None and not m.group("r2")):
            raise ValueError(f"malformed component {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("r2"):
            b += sign * coef
        else:
            a += sign * coef
    return QSqrt2(a, b)


def format_q2(x: QSqrt2) -> str:
    """Render canonically: ``0``, ``-1/2``, ``r2``, ``-2*r2``, ``1+r2``, ``1-1/2*r2``."""

    def r2_term(b: Fraction, lead: bool) -> str:
        sign = "-" if b < 0 else ("" if lead else "+")
        mag = abs(b)
        return f"{sign}r2" if mag == 1 else f"{sign}{mag}*r2"

    if x.b == 0:
        return str(x.a)
    if x.a == 0:
        return r2_term(x.b, lead=True)
    return f"{x.a}{r2_term(x.b, lead=False)}"


def format_rational(x: Fraction) -> str:
    """Render a rational as ``p`` or ``p/q``."""
    return str(x)
