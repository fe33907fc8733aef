"""Decorated plumbing graphs, blow-downs and the intersection form.

Vertices represent embedded surfaces (self-intersection, genus), edges
carry geometric intersection multiplicities.  A Seifert manifold with
orientable base bounds the star-shaped plumbing whose central vertex has
weight e0(M) and genus g and whose legs are the minus-sign expansions of
alpha/(alpha-beta), one chain per exceptional fiber.

Blowing down a (-1)-sphere v adds p^2 to the self-intersection and
binom(p,2) to the genus of a neighbor met p times (double points are
smoothed immediately), and adds p*q to the multiplicity between
neighbors met p and q times.  Graphs are treated as immutable values:
every operation returns a fresh graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .cf import neg_cf_expand
from .seifert import SeifertData, InvalidSeifertError, is_normalized


@dataclass(frozen=True)
class SurfaceClass:
    """Homology class of an embedded oriented surface."""

    selfint: int
    genus: int


@dataclass(frozen=True)
class PlumbingGraph:
    """Intersection graph: vertex id -> SurfaceClass, edge pair -> multiplicity."""

    vertices: dict
    edges: dict

    def neighbors(self, v: int) -> dict[int, int]:
        """Map of neighbor id -> edge multiplicity."""
        out: dict[int, int] = {}
        for (a, b), mult in self.edges.items():
            if a == v:
                out[b] = mult
            elif b == v:
                out[a] = mult
        return out


def _edge_key(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise ValueError("self-loops are not allowed")
    return (u, v) if u < v else (v, u)


@lru_cache(maxsize=None)
def _leg_chain(alpha: int, beta: int) -> tuple[int, ...]:
    return neg_cf_expand(Fraction(alpha, alpha - beta))


@lru_cache(maxsize=None)
def _leg_classes(alpha: int, beta: int) -> tuple[SurfaceClass, ...]:
    return tuple(SurfaceClass(-c, 0) for c in _leg_chain(alpha, beta))


def build_plumbing(data: SeifertData) -> PlumbingGraph:
    """Star-shaped plumbing bounded by the given Seifert manifold.

    Requires an orientable base (g >= 0); pass through the orientation
    double cover first otherwise.  The center gets id 0; leg i occupies
    the next consecutive ids, attached to the center at its first
    coefficient.
    """
    if not is_normalized(data):
        raise InvalidSeifertError(f"expected normalized invariants, got {data}")
    if data.g < 0:
        raise InvalidSeifertError("plumbing requires an orientable base (g >= 0)")
    vertices = {0: SurfaceClass(-data.b - len(data.fibers), data.g)}
    edges: dict[tuple[int, int], int] = {}
    next_id = 1
    for alpha, beta in data.fibers:
        prev = 0
        for cls in _leg_classes(alpha, beta):
            vertices[next_id] = cls
            edges[(prev, next_id)] = 1  # prev < next_id by construction
            prev = next_id
            next_id += 1
    return PlumbingGraph(vertices, edges)


def adjunction_ok(surface: SurfaceClass) -> bool:
    """Adjunction bound: spheres need square <= -1, genus g > 0 needs <= 2g-2."""
    if surface.genus == 0:
        return surface.selfint <= -1
    return surface.selfint <= 2 * surface.genus - 2


def blow_down(graph: PlumbingGraph, v: int) -> PlumbingGraph:
    """Remove a (-1)-sphere, pushing its intersections onto the neighbors."""
    cls = graph.vertices.get(v)
    if cls is None:
        raise ValueError(f"no vertex {v}")
    if cls.selfint != -1 or cls.genus != 0:
        raise ValueError(f"vertex {v} is not a (-1)-sphere: {cls}")
    incident = graph.neighbors(v)
    vertices = {}
    for u, c in graph.vertices.items():
        if u == v:
            continue
        if u in incident:
            p = incident[u]
            c = SurfaceClass(c.selfint + p * p, c.genus + comb(p, 2))
        vertices[u] = c
    edges = {k: m for k, m in graph.edges.items() if v not in k}
    nbrs = sorted(incident)
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            key = _edge_key(a, b)
            edges[key] = edges.get(key, 0) + incident[a] * incident[b]
    return PlumbingGraph(vertices, edges)


def fully_blow_down(graph: PlumbingGraph):
    """Blow down (-1)-spheres (smallest id first) as far as possible.

    Stops early if any vertex class violates the adjunction bound and
    returns (terminal graph, first violating class or None).
    """
    while True:
        violating = [v for v in sorted(graph.vertices) if not adjunction_ok(graph.vertices[v])]
        if violating:
            return graph, graph.vertices[violating[0]]
        blowable = [
            v for v in sorted(graph.vertices)
            if graph.vertices[v] == SurfaceClass(-1, 0)
        ]
        if not blowable:
            return graph, None
        graph = blow_down(graph, blowable[0])


def intersection_matrix(graph: PlumbingGraph) -> list[list[int]]:
    """Symmetric matrix: diagonal self-intersections, off-diagonal multiplicities."""
    ids = sorted(graph.vertices)
    index = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    matrix = [[0] * n for _ in range(n)]
    for v, i in index.items():
        matrix[i][i] = graph.vertices[v].selfint
    for (a, b), mult in graph.edges.items():
        i, j = index[a], index[b]
        matrix[i][j] = mult
        matrix[j][i] = mult
    return matrix


def _sparse_rows(matrix):
    """Validate a square symmetric matrix, return sparse row dicts."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    for row, col in zip(matrix, zip(*matrix)):
        if list(row) != list(col):
            raise ValueError("matrix is not symmetric")
    return [{j: x for j, x in enumerate(row) if x} for row in matrix]


def _indexed_pivots_negative(rows):
    """Descending-index elimination when each vertex has at most one
    lower-indexed neighbor (star plumbings: legs carry increasing ids).

    Pivots are exact integer pairs.  Returns None when the index-order
    assumption fails, handing off to the order-free eliminators.
    """
    n = len(rows)
    acc = [None] * n  # child contributions -sum w^2/d_child as (num, den)
    for v in range(n - 1, -1, -1):
        diag = 0
        parent = -1
        pw = 0
        for u, w in rows[v].items():
            if u == v:
                diag = w
            elif u < v:
                if parent >= 0:
                    return None  # two lower neighbors
                parent, pw = u, w
        a = acc[v]
        if a is None:
            num, den = diag, 1
        else:
            num, den = diag * a[1] + a[0], a[1]
        if den < 0:
            num, den = -num, -den
        if num >= 0:
            return False
        if parent >= 0:
            pa = acc[parent]
            if pa is None:
                acc[parent] = (-pw * pw * den, num)
            else:
                acc[parent] = (pa[0] * num - pw * pw * den * pa[1], pa[1] * num)
    return True


def _forest_pivots_negative(rows):
    """Exact tree elimination: every pivot d_v = a_v - sum w^2/d_child < 0.

    Pivots are integer pairs (num, den), den > 0; children are eliminated
    before parents, so no fill ever appears.  Returns None when a cycle is
    discovered, signalling the caller to fall back to general elimination.
    """
    n = len(rows)
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        order = []
        parent = {root: None}
        stack = [root]
        while stack:
            v = stack.pop()
            if seen[v]:
                return None  # cycle
            seen[v] = True
            order.append(v)
            pv = parent[v]
            for u in rows[v]:
                if u == v or u == pv:
                    continue
                if u in parent:
                    return None  # cycle
                parent[u] = v
                stack.append(u)
        ratio: dict[int, tuple[int, int]] = {}
        for v in reversed(order):  # children first
            num, den = rows[v].get(v, 0), 1
            for u, w in rows[v].items():
                if u == v or parent.get(u) != v:
                    continue
                cn, cd = ratio[u]
                num, den = num * cn - w * w * cd * den, den * cn
            if den < 0:
                num, den = -num, -den
            if num >= 0:
                return False
            ratio[v] = (num, den)
    return True


def _general_pivots_negative(rows) -> bool:
    """Sparse symmetric elimination (highest id first) with exact rationals."""
    n = len(rows)
    work: list[dict[int, Fraction]] = [
        {j: Fraction(x) for j, x in r.items()} for r in rows
    ]
    for v in range(n - 1, -1, -1):
        pivot = work[v].pop(v, Fraction(0))
        if pivot >= 0:
            return False
        coupled = [(u, w) for u, w in work[v].items() if u < v and w != 0]
        for u, _ in coupled:
            work[u].pop(v, None)
        for idx, (u, wu) in enumerate(coupled):
            for t, wt in coupled[idx:]:
                delta = wu * wt / pivot
                work[u][t] = work[u].get(t, Fraction(0)) - delta
                if t != u:
                    work[t][u] = work[t].get(u, Fraction(0)) - delta
    return True


def is_negative_definite(matrix) -> bool:
    """Exact negative-definiteness decision for a symmetric integer matrix.

    Equivalent to strict sign alternation of the leading principal minors;
    implemented as symmetric elimination with exact arithmetic (a zero or
    nonnegative pivot in any symmetric elimination order refutes
    definiteness).
    """
    rows = _sparse_rows(matrix)
    if not rows:
        return True
    verdict = _indexed_pivots_negative(rows)
    if verdict is None:
        verdict = _forest_pivots_negative(rows)
        if verdict is None:  # coupling graph has a cycle
            verdict = _general_pivots_negative(rows)
    return verdict


def determinant(matrix) -> int:
    """Integer determinant via fraction-free (Bareiss) elimination."""
    n = len(matrix)
    a = [list(row) for row in matrix]
    for row in a:
        if len(row) != n:
            raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def leading_principal_minors(matrix) -> list[int]:
    """Determinants of the top-left k x k blocks, k = 1..n."""
    return [determinant([row[:k] for row in matrix[:k]]) for k in range(1, len(matrix) + 1)]


def to_dot(graph: PlumbingGraph) -> str:
    """Graphviz rendering; vertex labels x=<selfint>,g=<genus>, edge labels multiplicities."""
    lines = ["graph plumbing {"]
    for v in sorted(graph.vertices):
        c = graph.vertices[v]
        lines.append(f'  v{v} [label="x={c.selfint},g={c.genus}"];')
    for (a, b) in sorted(graph.edges):
        lines.append(f'  v{a} -- v{b} [label="{graph.edges[(a, b)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
