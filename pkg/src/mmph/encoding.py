"""Reader and writer for the single-line ASCII hypergraph format.

A set is written as comma-separated edges terminated by a period, e.g.
``12,23,34,45,51.``; each vertex is one alphabet character, optionally
``+``-prefixed once per 90 ranks.  Whitespace between tokens is accepted on
input and never emitted on output, so parsing then serializing a source
listing reproduces it byte for byte modulo whitespace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import QSqrt2, format_q2, parse_q2
from .hypergraph import (
    _CHAR_RANK,
    Hypergraph,
    MmphError,
    ValidationError,
    require_valid,
    validate,
)

_WHITESPACE = " \t\r\n"


@dataclass(frozen=True)
class Diagnostic:
    """A parse problem at a character offset."""

    position: int
    severity: str  # "error" | "warning"
    message: str

    def __str__(self) -> str:
        return f"{self.position}:{self.severity}:{self.message}"


class ParseError(MmphError):
    def __init__(self, diagnostics: list[Diagnostic]):
        super().__init__("; ".join(str(d) for d in diagnostics))
        self.diagnostics = diagnostics


def _fail(position: int, message: str) -> ParseError:
    return ParseError([Diagnostic(position, "error", message)])


def parse_mmph(text: str, dimension: int = 3, strict: bool = True) -> Hypergraph:
    """Parse one hypergraph string.

    Syntax problems raise :class:`ParseError`.  With ``strict`` (the default)
    structural violations raise :class:`ValidationError` as well; pass
    ``strict=False`` to obtain the raw hypergraph and inspect
    :func:`~mmph.hypergraph.validate` output yourself.

    A lone ``.`` denotes the empty hypergraph.
    """
    edges: list[tuple[str, ...]] = []
    current: list[str] = []
    plus = 0
    plus_start = -1
    end = -1
    for i, ch in enumerate(text):
        if ch in _WHITESPACE:
            continue
        if plus and ch in ",.":
            raise _fail(plus_start, "dangling '+' without a label character")
        if ch in ",.":
            if not current:
                if ch == "." and not edges:
                    end = i  # empty hypergraph
                    break
                raise _fail(i, "empty edge")
            edges.append(tuple(current))
            current = []
            if ch == ".":
                end = i
                break
            continue
        if ch == "+":
            if plus == 0:
                plus_start = i
            plus += 1
            continue
        if ch not in _CHAR_RANK:
            raise _fail(i, f"character {ch!r} outside the label alphabet")
        label = "+" * plus + ch
        plus = 0
        if label in current:
            raise _fail(i, f"vertex {label!r} repeated within an edge")
        current.append(label)
    if plus:
        raise _fail(plus_start, "dangling '+' without a label character")
    if end < 0:
        raise _fail(len(text), "missing '.' terminator")
    trailing = text[end + 1 :].strip()
    if trailing:
        raise _fail(end + 1, f"unexpected content after '.': {trailing[:20]!r}")
    h = Hypergraph(tuple(edges), dimension)
    if strict:
        require_valid(h)
    return h


def serialize_mmph(h: Hypergraph) -> str:
    """Inverse of :func:`parse_mmph`; emits no whitespace."""
    return ",".join("".join(e) for e in h.edges) + "."


def render_diagnostics(diags: list[Diagnostic]) -> str:
    return "\n".join(str(d) for d in diags)


# --- coordinate sidecar format -------------------------------------------
#
# One assignment per line (comma separation also accepted):
#   label={c1,c2,c3}
# with each component an exact literal such as 2, -1/3, r2, -r2 or 1-1/2*r2.

Vec = tuple[QSqrt2, QSqrt2, QSqrt2]


def parse_coordinates(text: str) -> dict[str, Vec]:
    """Parse a coordinate listing into exact 3-vectors keyed by label."""
    out: dict[str, Vec] = {}
    pos = 0
    n = len(text)
    while pos < n:
        while pos < n and text[pos] in _WHITESPACE + ",":
            pos += 1
        if pos >= n:
            break
        eq = text.find("=", pos)
        if eq < 0:
            raise _fail(pos, "expected 'label={c1,c2,c3}'")
        label = text[pos:eq].strip()
        if not label:
            raise _fail(pos, "missing label before '='")
        open_b = text.find("{", eq)
        close_b = text.find("}", eq)
        if open_b != eq + 1 or close_b < 0:
            raise _fail(eq, f"malformed vector for label {label!r}")
        parts = text[open_b + 1 : close_b].split(",")
        if len(parts) != 3:
            raise _fail(open_b, f"vector for {label!r} needs 3 components")
        try:
            comps = tuple(parse_q2(p) for p in parts)
        except ValueError as exc:
            raise _fail(open_b, f"{label}: {exc}") from None
        if not any(comps):
            raise _fail(open_b, f"zero vector for label {label!r}")
        if label in out:
            raise _fail(pos, f"label {label!r} assigned twice")
        out[label] = comps  # type: ignore[assignment]
        pos = close_b + 1
    if not out:
        raise _fail(0, "no coordinate assignments found")
    return out


def serialize_coordinates(coords: dict[str, Vec]) -> str:
    lines = []
    for label, vec in coords.items():
        body = ",".join(format_q2(c) for c in vec)
        lines.append(f"{label}={{{body}}}")
    return "\n".join(lines) + "\n"


__all__ = [
    "Diagnostic",
    "ParseError",
    "ValidationError",
    "parse_mmph",
    "serialize_mmph",
    "parse_coordinates",
    "serialize_coordinates",
    "render_diagnostics",
    "validate",
]
