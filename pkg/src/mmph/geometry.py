"""Exact 3-vector geometry over Q(sqrt 2): coordinatization verification,
filled-set construction and backtracking ray search.

A coordinatization assigns projective rays to vertices so that vertices
sharing an edge get orthogonal rays and no two vertices get parallel rays.
Rays are compared projectively throughout; the canonical representative
scales the first nonzero component to 1.

A coordinatization of a mixed-size set is understood as a coordinatization
of its *filled* companion: each 2-edge has an implicit third ray, the cross
product of its two, and those implicit rays take part in the distinctness
requirement.  That convention is what makes short loops unrealizable: the
triangle ``12,23,31.`` forces three implicit rays parallel to the opposite
vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .field import QSqrt2, ZERO, parse_q2
from .hypergraph import (
    Hypergraph,
    PreconditionError,
    fresh_labels,
)

Vec = tuple[QSqrt2, QSqrt2, QSqrt2]
Coordinatization = dict[str, Vec]


def vec(x: object, y: object, z: object) -> Vec:
    def q(c: object) -> QSqrt2:
        return c if isinstance(c, QSqrt2) else QSqrt2(c)  # type: ignore[arg-type]

    return (q(x), q(y), q(z))


def dot(u: Vec, v: Vec) -> QSqrt2:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec, v: Vec) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def is_zero_vec(v: Vec) -> bool:
    return not (v[0] or v[1] or v[2])


def canonical_ray(v: Vec) -> Vec:
    """Scale so the first nonzero component is 1."""
    for c in v:
        if c:
            inv = c.inverse()
            return (v[0] * inv, v[1] * inv, v[2] * inv)
    raise ValueError("zero vector has no ray")


def ray_key(v: Vec) -> tuple:
    return tuple((c.a, c.b) for c in canonical_ray(v))


def projectively_equal(u: Vec, v: Vec) -> bool:
    """True when u = lambda*v for a nonzero field scalar lambda."""
    if is_zero_vec(u) or is_zero_vec(v):
        raise PreconditionError("rays must be nonzero")
    return is_zero_vec(cross(u, v))


@dataclass(frozen=True)
class CoordIssue:
    severity: str  # "error" | "warning"
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.message}"


def verify_coordinatization(
    h: Hypergraph, coords: Coordinatization, partial: bool = False
) -> list[CoordIssue]:
    """Check intra-edge orthogonality and global projective distinctness.

    With ``partial`` the check covers only the pairs whose both endpoints
    carry vectors (source listings often print a subset); otherwise a vertex
    without a vector is an error.  Labels that name no vertex of ``h`` are
    reported as warnings either way.
    """
    issues: list[CoordIssue] = []
    vertex_set = set(h.vertices)
    for label in coords:
        if label not in vertex_set:
            issues.append(CoordIssue("warning", f"label {label} not in hypergraph"))
    if not partial:
        for v in h.vertices:
            if v not in coords:
                issues.append(CoordIssue("error", f"vertex {v} has no vector"))
    for i, e in enumerate(h.edges):
        for a, b in itertools.combinations(e, 2):
            if a in coords and b in coords and dot(coords[a], coords[b]):
                issues.append(
                    CoordIssue(
                        "error", f"edge {i} ({''.join(e)}): {a} and {b} not orthogonal"
                    )
                )
    assigned = [v for v in h.vertices if v in coords]
    for a, b in itertools.combinations(assigned, 2):
        if projectively_equal(coords[a], coords[b]):
            issues.append(CoordIssue("error", f"{a} and {b} are parallel rays"))
    return issues


def fill(h: Hypergraph) -> Hypergraph:
    """Append one fresh vertex to every 2-edge so all edges reach size 3."""
    if h.dimension != 3:
        raise PreconditionError("filling is implemented for dimension 3")
    if any(len(e) not in (2, 3) for e in h.edges):
        raise PreconditionError("filling expects edges of size 2 or 3")
    fresh = iter(fresh_labels(h, sum(1 for e in h.edges if len(e) == 2)))
    edges = tuple(e if len(e) == 3 else e + (next(fresh),) for e in h.edges)
    return Hypergraph(edges, h.dimension)


def fill_coordinates(h: Hypergraph, coords: Coordinatization) -> Coordinatization:
    """Extend a coordinatization of ``h`` to its filled companion.

    The fresh vertex of each 2-edge takes the cross product of the edge's two
    rays; the result verifies on ``fill(h)`` whenever ``coords`` verifies on
    ``h`` with non-degenerate doublets.
    """
    filled = fill(h)
    out = dict(coords)
    for original, new in zip(h.edges, filled.edges):
        if len(original) == 2:
            a, b = original
            if a not in coords or b not in coords:
                raise PreconditionError(f"doublet {a}{b} lacks assigned vectors")
            third = cross(coords[a], coords[b])
            if is_zero_vec(third):
                raise PreconditionError(f"doublet {a}{b} has parallel vectors")
            out[new[2]] = third
    return out


def orthogonality_matrix(
    coords: Coordinatization, order: list[str]
) -> list[list[int]]:
    """Symmetric 0/1 matrix of ray orthogonality over ``order``.

    Entry (i, j) is 1 exactly when the two rays are orthogonal; the diagonal
    is 0.  All orthogonal pairs count, whether or not they share an edge.
    """
    missing = [v for v in order if v not in coords]
    if missing:
        raise PreconditionError(f"no vector for {missing}")
    k = len(order)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if not dot(coords[order[i]], coords[order[j]]):
                out[i][j] = out[j][i] = 1
    return out


# --- pool search ----------------------------------------------------------


@dataclass(frozen=True)
class ComponentPool:
    """Projective candidate rays built from a component value set."""

    components: tuple[QSqrt2, ...]
    rays: tuple[Vec, ...]

    @classmethod
    def from_components(cls, components: list[QSqrt2]) -> "ComponentPool":
        if not components or not any(components):
            raise PreconditionError("pool needs at least one nonzero component")
        if not any(c == ZERO for c in components):
            raise PreconditionError("pool must contain 0")
        seen: dict[tuple, Vec] = {}
        for triple in itertools.product(components, repeat=3):
            if not any(triple):
                continue
            key = ray_key(triple)  # type: ignore[arg-type]
            if key not in seen:
                seen[key] = canonical_ray(triple)  # type: ignore[arg-type]
        return cls(tuple(components), tuple(seen.values()))

    @classmethod
    def parse(cls, spec: str) -> "ComponentPool":
        comps = [parse_q2(p) for p in spec.split(",") if p.strip()]
        return cls.from_components(comps)

    def __len__(self) -> int:
        return len(self.rays)


@dataclass(frozen=True)
class CoordSearchResult:
    status: str  # "found" | "exhausted" | "budget-exceeded"
    coordinatization: Coordinatization | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def find_coordinatization(
    h: Hypergraph, pool: ComponentPool, budget: int = 10_000_000
) -> CoordSearchResult:
    """Backtracking ray assignment over a component pool.

    Vertices are placed most-constrained-first; every placement must be
    orthogonal to the already-placed members of its edges and projectively
    distinct from every used ray, including the forced third rays of
    completed 2-edges.  ``exhausted`` under budget proves that no
    coordinatization exists over this pool (not over the whole field).
    """
    if h.dimension != 3:
        raise PreconditionError("search is implemented for dimension 3")
    rays = pool.rays
    n_rays = len(rays)
    # pairwise orthogonality bitmasks over pool rays
    ortho = [0] * n_rays
    for i in range(n_rays):
        for j in range(i + 1, n_rays):
            if not dot(rays[i], rays[j]):
                ortho[i] |= 1 << j
                ortho[j] |= 1 << i
    key_of = [ray_key(r) for r in rays]
    verts = h.vertices
    partners: dict[str, list[list[str]]] = {v: [] for v in verts}
    for e in h.edges:
        for v in e:
            partners[v].append([w for w in e if w != v])
    doublets = [e for e in h.edges if len(e) == 2]
    assigned: dict[str, int] = {}
    used_pool = 0
    used_keys: set[tuple] = set()
    cross_keys: dict[int, tuple] = {}
    nodes = 0
    all_rays_mask = (1 << n_rays) - 1

    def next_vertex() -> str | None:
        best, score = None, (-1, -1)
        for v in verts:
            if v in assigned:
                continue
            placed = sum(1 for grp in partners[v] for w in grp if w in assigned)
            s = (placed, len(partners[v]))
            if s > score:
                best, score = v, s
        return best

    def completions(v: str, ray: Vec, key: tuple) -> list[tuple[int, tuple]] | None:
        done: list[tuple[int, tuple]] = []
        for di, e in enumerate(doublets):
            if di in cross_keys or v not in e:
                continue
            other = e[0] if e[1] == v else e[1]
            if other not in assigned:
                continue
            third = cross(ray, rays[assigned[other]])
            if is_zero_vec(third):
                return None
            k = ray_key(third)
            if k == key or k in used_keys or any(k == ck for _, ck in done):
                return None
            done.append((di, k))
        return done

    def search() -> bool:
        nonlocal used_pool, nodes
        v = next_vertex()
        if v is None:
            return True
        cands = all_rays_mask & ~used_pool
        for grp in partners[v]:
            for w in grp:
                if w in assigned:
                    cands &= ortho[assigned[w]]
        while cands:
            bit = cands & -cands
            cands ^= bit
            i = bit.bit_length() - 1
            nodes += 1
            if nodes > budget:
                return False
            key = key_of[i]
            if key in used_keys:
                continue
            done = completions(v, rays[i], key)
            if done is None:
                continue
            assigned[v] = i
            used_pool |= bit
            used_keys.add(key)
            for di, k in done:
                cross_keys[di] = k
                used_keys.add(k)
            if search():
                return True
            del assigned[v]
            used_pool &= ~bit
            used_keys.discard(key)
            for di, k in done:
                del cross_keys[di]
                used_keys.discard(k)
        return False

    found = search()
    if found:
        coords = {v: rays[i] for v, i in assigned.items()}
        return CoordSearchResult("found", coords, nodes)
    status = "budget-exceeded" if nodes > budget else "exhausted"
    return CoordSearchResult(status, None, nodes)
