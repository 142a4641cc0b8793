"""Brute-force spanning tree enumeration and tree statistics.

This is the independent oracle against which the determinant route is
checked: trees are enumerated one by one by recursive inclusion/exclusion
of edges (contraction happens in a union-find, deletion prunes on a
connectivity test, which doubles as the bridge shortcut: a bridge has no
exclusion branch).  A determinant count at all-ones gates the enumeration
so a huge graph fails fast instead of hanging.
"""

from __future__ import annotations

from enum import Enum

from .graphs import Graph, SpanningTree, is_connected
from .laplacian import SchemeMismatch, WeightScheme
from .polyring import Monomial, Polynomial, q, x, xd, y

DEFAULT_CAP = 10_000_000


class CapExceeded(RuntimeError):
    """Predicted spanning tree count exceeds the enumeration cap."""


class DisconnectedGraph(ValueError):
    """Spanning trees requested for a disconnected graph."""


class TreeStatistic(Enum):
    DEGREE = "degree"
    DIRECTION = "direction"
    DIR_DECOUPLED = "decoupled"
    CUBE_SUBSTITUTED = "cube"
    IN_OUT_DEGREE = "inout"


_STAT_KINDS = {
    TreeStatistic.DEGREE: {"plain", "threshold"},
    TreeStatistic.DIRECTION: {"product", "cube"},
    TreeStatistic.DIR_DECOUPLED: {"product"},
    TreeStatistic.CUBE_SUBSTITUTED: {"cube"},
    TreeStatistic.IN_OUT_DEGREE: {"plain", "threshold"},
}

# weighting whose reduced-Laplacian determinant matches each statistic sum
SCHEME_FOR_STATISTIC = {
    TreeStatistic.DEGREE: WeightScheme.CAYLEY_PRUFER,
    TreeStatistic.DIRECTION: WeightScheme.DIRECTION,
    TreeStatistic.DIR_DECOUPLED: WeightScheme.DECOUPLED,
    TreeStatistic.CUBE_SUBSTITUTED: WeightScheme.CUBE_LAURENT,
    TreeStatistic.IN_OUT_DEGREE: WeightScheme.THRESHOLD_IN_OUT,
}


def _int_det(a: list[list[int]]) -> int:
    """Fraction-free integer determinant (Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees (multiplicities counted), by Kirchhoff."""
    n = g.n
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for e in g.edges:
        m = e.multiplicity
        lap[e.u][e.u] += m
        lap[e.v][e.v] += m
        lap[e.u][e.v] -= m
        lap[e.v][e.u] -= m
    reduced = [row[:-1] for row in lap[:-1]]
    return _int_det(reduced)


def all_spanning_trees(g: Graph, cap: int = DEFAULT_CAP) -> list[SpanningTree]:
    """Every spanning tree exactly once; parallel copies count separately."""
    n = g.n
    if n == 1:
        return [SpanningTree(())]
    if not is_connected(g):
        raise DisconnectedGraph("graph has no spanning trees")
    predicted = spanning_tree_count(g)
    if predicted > cap:
        raise CapExceeded(f"{predicted} spanning trees exceed cap {cap}")

    expanded: list[tuple[int, int, int]] = []
    for idx, e in enumerate(g.edges):
        for _ in range(e.multiplicity):
            expanded.append((e.u, e.v, idx))
    n_edges = len(expanded)

    parent = list(range(n))
    rank = [0] * n

    def find(a: int) -> int:
        # no path compression: unions must be undoable
        while parent[a] != a:
            a = parent[a]
        return a

    alive = [True] * n_edges
    result: list[SpanningTree] = []
    chosen: list[int] = []

    def still_connected(pos: int) -> bool:
        """Can the alive edges from pos onward finish connecting the forest?"""
        local: dict[int, int] = {}

        def lfind(a: int) -> int:
            a = find(a)
            while local.get(a, a) != a:
                a = local[a]
            return a

        roots = {find(v) for v in range(n)}
        comps = len(roots)
        if comps == 1:
            return True
        for k in range(pos, n_edges):
            if not alive[k]:
                continue
            ra, rb = lfind(expanded[k][0]), lfind(expanded[k][1])
            if ra != rb:
                local[ra] = rb
                comps -= 1
                if comps == 1:
                    return True
        return False

    def rec(pos: int, components: int) -> None:
        if components == 1:
            result.append(SpanningTree(tuple(sorted(chosen))))
            return
        if pos == n_edges:
            return
        u, v, orig = expanded[pos]
        ru, rv = find(u), find(v)
        if ru == rv:
            # cycle edge: only the exclusion branch exists
            rec(pos + 1, components)
            return
        # include the edge (contraction)
        if rank[ru] < rank[rv]:
            ru, rv = rv, ru
        parent[rv] = ru
        bumped = rank[ru] == rank[rv]
        if bumped:
            rank[ru] += 1
        chosen.append(orig)
        rec(pos + 1, components - 1)
        chosen.pop()
        if bumped:
            rank[ru] -= 1
        parent[rv] = rv
        # exclude the edge (deletion); a bridge has no such branch
        alive[pos] = False
        if still_connected(pos + 1):
            rec(pos + 1, components)
        alive[pos] = True

    rec(0, n)
    if len(result) != predicted:
        raise AssertionError(
            f"enumerated {len(result)} trees but determinant predicts {predicted}"
        )
    return result


def statistic_monomial(g: Graph, tree: SpanningTree, stat: TreeStatistic) -> Monomial:
    """Monomial a single spanning tree contributes under the statistic."""
    if g.kind not in _STAT_KINDS[stat]:
        raise SchemeMismatch(f"{stat.value} statistic is not defined on a {g.kind} graph")
    exps: dict = {}

    def bump(var, e=1):
        exps[var] = exps.get(var, 0) + e

    if stat is TreeStatistic.DEGREE:
        for idx in tree.edge_indices:
            e = g.edges[idx]
            bump(x(e.u + 1))
            bump(x(e.v + 1))
    elif stat is TreeStatistic.DIRECTION:
        for idx in tree.edge_indices:
            bump(q(g.edges[idx].direction))
    elif stat is TreeStatistic.DIR_DECOUPLED:
        for idx in tree.edge_indices:
            e = g.edges[idx]
            bump(q(e.direction))
            for label in (g.labels[e.u], g.labels[e.v]):
                for t, member in enumerate(label, start=1):
                    bump(xd(t, member))
    elif stat is TreeStatistic.CUBE_SUBSTITUTED:
        n = len(g.dims)
        for idx in tree.edge_indices:
            e = g.edges[idx]
            bump(q(e.direction))
            s_set = g.labels[e.u]
            for t in range(1, n + 1):
                if t == e.direction:
                    continue
                bump(x(t), 1 if t in s_set else -1)
    elif stat is TreeStatistic.IN_OUT_DEGREE:
        for idx in tree.edge_indices:
            e = g.edges[idx]
            bump(x(e.u + 1))
            bump(y(e.v + 1))
    return Monomial.of(exps)


def enumerate_sum(g: Graph, stat: TreeStatistic, cap: int = DEFAULT_CAP) -> Polynomial:
    """Sum of statistic monomials over every spanning tree."""
    terms: dict[Monomial, int] = {}
    for tree in all_spanning_trees(g, cap=cap):
        m = statistic_monomial(g, tree, stat)
        terms[m] = terms.get(m, 0) + 1
    return Polynomial(terms)
