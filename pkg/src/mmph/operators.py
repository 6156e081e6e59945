"""Reflection-operator analysis in the Yu-Oh style.

Each ray v defines the reflection A = I - 2*vv^T/(v^Tv).  For a vertex list
with orthogonality matrix G the aggregate operator is

    L = sum_i A_i - (1/4) * sum_i sum_j G_ij A_i A_j

with the double sum over ordered pairs, so every unordered orthogonal pair
contributes twice.  The classical counterpart replaces A_i by variables
a_i in {-1, +1} and maximizes the same expression exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .field import QSqrt2, ZERO, format_q2
from .geometry import Coordinatization, Vec, dot
from .hypergraph import PreconditionError

Mat3 = tuple[tuple[QSqrt2, QSqrt2, QSqrt2], ...]

_EXHAUSTIVE_LIMIT = 26
_CHUNK = 1 << 20


def identity() -> Mat3:
    one, zero = QSqrt2(1), ZERO
    return (
        (one, zero, zero),
        (zero, one, zero),
        (zero, zero, one),
    )


def mat_add(x: Mat3, y: Mat3) -> Mat3:
    return tuple(
        tuple(x[i][j] + y[i][j] for j in range(3)) for i in range(3)
    )  # type: ignore[return-value]


def mat_scale(s: QSqrt2 | Fraction | int, x: Mat3) -> Mat3:
    s = s if isinstance(s, QSqrt2) else QSqrt2(s)
    return tuple(tuple(s * x[i][j] for j in range(3)) for i in range(3))  # type: ignore[return-value]


def mat_mul(x: Mat3, y: Mat3) -> Mat3:
    return tuple(
        tuple(
            x[i][0] * y[0][j] + x[i][1] * y[1][j] + x[i][2] * y[2][j]
            for j in range(3)
        )
        for i in range(3)
    )  # type: ignore[return-value]


def mat_eq(x: Mat3, y: Mat3) -> bool:
    return all(x[i][j] == y[i][j] for i in range(3) for j in range(3))


def mat_to_float(x: Mat3) -> np.ndarray:
    return np.array([[float(c) for c in row] for row in x], dtype=float)


def format_matrix(x: Mat3) -> list[list[str]]:
    return [[format_q2(c) for c in row] for row in x]


def reflection_operator(v: Vec) -> Mat3:
    """A = I - 2*vv^T/(v^Tv): symmetric, squares to I, trace 1."""
    norm = dot(v, v)
    if not norm:
        raise PreconditionError("zero vector has no reflection operator")
    inv = norm.inverse()
    two = QSqrt2(2)
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            entry = (QSqrt2(1) if i == j else ZERO) - two * v[i] * v[j] * inv
            row.append(entry)
        rows.append(tuple(row))
    return tuple(rows)  # type: ignore[return-value]


def orthogonal_pairs(coords: Coordinatization, order: list[str]) -> list[tuple[int, int]]:
    """Index pairs of orthogonal rays over ``order`` (shared edge or not)."""
    missing = [v for v in order if v not in coords]
    if missing:
        raise PreconditionError(f"no vector for {missing}")
    pairs = []
    for i, j in itertools.combinations(range(len(order)), 2):
        if not dot(coords[order[i]], coords[order[j]]):
            pairs.append((i, j))
    return pairs


_gamma_pairs = orthogonal_pairs


def aggregate_operator(coords: Coordinatization, order: list[str]) -> Mat3:
    """The operator L over the given vertices, exactly as defined above."""
    ops = [reflection_operator(coords[v]) for v in order]
    total = ((ZERO,) * 3,) * 3
    for op in ops:
        total = mat_add(total, op)
    minus_quarter = QSqrt2(Fraction(-1, 4))
    for i, j in _gamma_pairs(coords, order):
        both = mat_add(mat_mul(ops[i], ops[j]), mat_mul(ops[j], ops[i]))
        total = mat_add(total, mat_scale(minus_quarter, both))
    return total


def classify_operator(m: Mat3) -> tuple[bool, bool, QSqrt2 | None]:
    """(is_diagonal, is_scalar, scalar value when scalar)."""
    diagonal = all(not m[i][j] for i in range(3) for j in range(3) if i != j)
    if not diagonal:
        return False, False, None
    scalar = m[0][0] == m[1][1] == m[2][2]
    return True, scalar, m[0][0] if scalar else None


def max_classical(
    coords: Coordinatization, order: list[str], mode: str = "auto"
) -> Fraction:
    """Exact maximum of sum(a_i) - (1/4)*sum_ij G_ij a_i a_j over a in {-1,1}^k.

    ``exhaustive`` scans all 2^k sign patterns (k <= 26); ``branch-and-bound``
    proves the optimum via partial-sum bounds and handles any k.  ``auto``
    picks by size.
    """
    return max_classical_from_pairs(len(order), _gamma_pairs(coords, order), mode)


def max_classical_from_pairs(
    k: int, pairs: list[tuple[int, int]], mode: str = "auto"
) -> Fraction:
    """Same optimum from an explicit orthogonality pair list."""
    if mode == "auto":
        mode = "exhaustive" if k <= _EXHAUSTIVE_LIMIT else "branch-and-bound"
    if mode == "exhaustive":
        if k > _EXHAUSTIVE_LIMIT:
            raise PreconditionError(
                f"exhaustive mode supports at most {_EXHAUSTIVE_LIMIT} vertices"
            )
        return _max_classical_exhaustive(k, pairs)
    if mode == "branch-and-bound":
        return _max_classical_bb(k, pairs)
    raise ValueError(f"unknown mode {mode!r}")


def _max_classical_exhaustive(k: int, pairs: list[tuple[int, int]]) -> Fraction:
    # value = S - Q/2 with S = k - 2*popcount, Q = agreements - disagreements;
    # track the integer 2*value to stay exact
    if k == 0:
        return Fraction(0)
    best = None
    n_pairs = len(pairs)
    for start in range(0, 1 << k, _CHUNK):
        stop = min(start + _CHUNK, 1 << k)
        masks = np.arange(start, stop, dtype=np.uint32)
        disagree = np.zeros(stop - start, dtype=np.int32)
        for i, j in pairs:
            disagree += ((masks >> np.uint32(i)) ^ (masks >> np.uint32(j))) & np.uint32(1)
        s = k - 2 * np.bitwise_count(masks).astype(np.int32)
        q = n_pairs - 2 * disagree
        doubled = 2 * s - q
        top = int(doubled.max())
        if best is None or top > best:
            best = top
    return Fraction(best, 2)


def _max_classical_bb(k: int, pairs: list[tuple[int, int]]) -> Fraction:
    nbr: list[list[int]] = [[] for _ in range(k)]
    for i, j in pairs:
        nbr[i].append(j)
        nbr[j].append(i)
    # assign in degree order so pair terms resolve early
    order = sorted(range(k), key=lambda v: -len(nbr[v]))
    pos = {v: t for t, v in enumerate(order)}
    best = [-(10 ** 9)]
    signs = [0] * k  # 0 = unassigned

    def open_pairs_after(t: int) -> int:
        cnt = 0
        for i, j in pairs:
            if pos[i] >= t or pos[j] >= t:
                cnt += 1
        return cnt

    suffix_open = [open_pairs_after(t) for t in range(k)] + [0]

    def rec(t: int, doubled: int) -> None:
        # doubled = 2*S_assigned - Q_assigned so far
        if t == k:
            if doubled > best[0]:
                best[0] = doubled
            return
        # each unassigned vertex adds at most 2; each open pair at most 1
        if doubled + 2 * (k - t) + suffix_open[t] <= best[0]:
            return
        v = order[t]
        for s in (1, -1):
            signs[v] = s
            delta = 2 * s
            for w in nbr[v]:
                if signs[w]:
                    delta -= s * signs[w]
            rec(t + 1, doubled + delta)
        signs[v] = 0

    rec(0, 0)
    return Fraction(best[0], 2)


@dataclass(frozen=True)
class OperatorReport:
    """Aggregate-operator summary for one vertex list."""

    order: tuple[str, ...]
    matrix: Mat3
    is_diagonal: bool
    is_scalar: bool
    scalar_value: QSqrt2 | None
    max_classical: Fraction
    verdict: str  # "greater" | "equal" | "less" | "not-scalar"
    eigenvalue_range: tuple[float, float] | None  # advisory floats, non-scalar only
    orthogonal_pairs: int


def operator_report(coords: Coordinatization, order: list[str]) -> OperatorReport:
    """Build L, classify it, and compare its scalar value with the classical
    maximum; the quantum side is a single number only when L is scalar."""
    matrix = aggregate_operator(coords, order)
    diagonal, scalar, value = classify_operator(matrix)
    bound = max_classical(coords, order)
    eig = None
    if scalar:
        assert value is not None
        sign = (value - QSqrt2(bound)).sign()
        verdict = "greater" if sign > 0 else ("equal" if sign == 0 else "less")
    else:
        verdict = "not-scalar"
        eigs = np.linalg.eigvalsh(mat_to_float(matrix))
        eig = (float(eigs.min()), float(eigs.max()))
    pairs = _gamma_pairs(coords, order)
    return OperatorReport(
        order=tuple(order),
        matrix=matrix,
        is_diagonal=diagonal,
        is_scalar=scalar,
        scalar_value=value,
        max_classical=bound,
        verdict=verdict,
        eigenvalue_range=eig,
        orthogonal_pairs=len(pairs),
    )
