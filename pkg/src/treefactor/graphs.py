"""Graph families: complete graphs, multigraph thickenings, Cartesian
products, hypercubes, and threshold graphs, plus the partition helpers the
threshold constructions need.

Vertices are 0-based indices into a label tuple.  Labels carry the
math-facing identity: 1-based integers for plain graphs, coordinate tuples
for products (row-major order, last coordinate fastest), frozensets for
hypercubes (ordered by the subset <-> binary-tuple bijection).  Every edge
is stored with its smaller endpoint first and carries a direction tag (the
coordinate a product edge moves along; 1 elsewhere) and a multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union


class InvalidSize(ValueError):
    """Graph size parameter out of range."""


class EmptyFactor(ValueError):
    """Cartesian product factor list empty or a factor unusable."""


class NotThresholdSequence(ValueError):
    """Degree sequence not realizable by the threshold construction."""


class Edge(NamedTuple):
    u: int
    v: int
    direction: int = 1
    multiplicity: int = 1


@dataclass(frozen=True)
class Graph:
    kind: str  # "plain" | "product" | "cube" | "threshold"
    labels: tuple
    edges: tuple[Edge, ...]
    dims: Optional[tuple[int, ...]] = None
    degree_sequence: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        n = len(self.labels)
        for e in self.edges:
            if not (0 <= e.u < e.v < n):
                raise ValueError(f"bad edge {e} on {n} vertices")
            if e.multiplicity < 1:
                raise ValueError(f"bad multiplicity on edge {e}")

    @property
    def n(self) -> int:
        return len(self.labels)

    def degrees(self) -> tuple[int, ...]:
        """Vertex degrees, counting edge multiplicities."""
        deg = [0] * self.n
        for e in self.edges:
            deg[e.u] += e.multiplicity
            deg[e.v] += e.multiplicity
        return tuple(deg)


@dataclass(frozen=True)
class SpanningTree:
    """Edge-index multiset of one spanning tree of a parent graph.

    Indices point into the parent's edge list; a parallel-copy choice in a
    multigraph yields the same index tuple once per copy.
    """

    edge_indices: tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(p, int) or p < 0 for p in self.parts):
            raise ValueError("partition parts are nonnegative integers")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


PartitionLike = Union[Partition, Sequence[int]]


def _coerce_partition(lam: PartitionLike) -> Partition:
    if isinstance(lam, Partition):
        return lam
    return Partition(tuple(int(p) for p in lam))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = g.n
    for e in g.edges:
        ra, rb = find(e.u), find(e.v)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps == 1


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSize("complete graph needs at least one vertex")
    edges = tuple(Edge(u, v) for u in range(n) for v in range(u + 1, n))
    return Graph(kind="plain", labels=tuple(range(1, n + 1)), edges=edges)


def multigraph_kn(n: int, q: int) -> Graph:
    """Complete graph with every edge thickened to q parallel copies."""
    if n < 1:
        raise InvalidSize("complete graph needs at least one vertex")
    if q < 1:
        raise InvalidSize("edge multiplicity must be at least 1")
    edges = tuple(Edge(u, v, 1, q) for u in range(n) for v in range(u + 1, n))
    return Graph(kind="plain", labels=tuple(range(1, n + 1)), edges=edges)


def cartesian_product(factors: Sequence[Graph]) -> Graph:
    """Cartesian product; edges in coordinate i carry direction tag i (1-based).

    Vertex order is row-major over the factor label tuples with the last
    coordinate varying fastest.
    """
    if not factors:
        raise EmptyFactor("product of no factors")
    for g in factors:
        if g.n < 1:
            raise EmptyFactor("empty product factor")
        if g.kind != "plain":
            raise EmptyFactor("product factors must be plain graphs")
    sizes = [g.n for g in factors]
    r = len(factors)
    strides = [1] * r
    for i in range(r - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]
    total = strides[0] * sizes[0]

    labels = []
    coords = [0] * r
    for idx in range(total):
        rem = idx
        tup = []
        for i in range(r):
            c, rem = divmod(rem, strides[i])
            tup.append(factors[i].labels[c])
        labels.append(tuple(tup))

    edges: list[Edge] = []
    for i in range(r):
        # base offsets: all vertices whose coordinate i equals 0
        bases = []
        for idx in range(total):
            if (idx // strides[i]) % sizes[i] == 0:
                bases.append(idx)
        for fe in factors[i].edges:
            for base in bases:
                u = base + fe.u * strides[i]
                v = base + fe.v * strides[i]
                edges.append(Edge(u, v, i + 1, fe.multiplicity))
    return Graph(
        kind="product",
        labels=tuple(labels),
        edges=tuple(edges),
        dims=tuple(sizes),
    )


def hypercube(n: int) -> Graph:
    """Vertices are subsets of {1..n}; S and S+{i} are joined in direction i."""
    if n < 1:
        raise InvalidSize("hypercube dimension must be at least 1")
    weight = {i: 1 << (n - i) for i in range(1, n + 1)}
    labels = []
    for mask in range(1 << n):
        labels.append(frozenset(i for i in range(1, n + 1) if mask & weight[i]))
    edges: list[Edge] = []
    for mask in range(1 << n):
        for i in range(1, n + 1):
            if not mask & weight[i]:
                edges.append(Edge(mask, mask | weight[i], i, 1))
    return Graph(kind="cube", labels=tuple(labels), edges=tuple(edges), dims=(2,) * n)


def threshold_graph(lam: PartitionLike) -> Graph:
    """Build the graph whose vertex i neighbors the lam_i smallest others.

    Validity is decided constructively: the realized degree sequence must
    reproduce lam exactly, else the input is rejected.  A last part of 0
    yields an isolated vertex; the graph is still built and callers that
    need connectivity must check it.
    """
    lam = _coerce_partition(lam)
    n = len(lam)
    if n < 1:
        raise NotThresholdSequence("empty degree sequence")
    if any(p > n - 1 for p in lam):
        raise NotThresholdSequence(f"degree exceeds {n - 1} on {n} vertices")
    pairs: set[tuple[int, int]] = set()
    for i in range(1, n + 1):
        others = [j for j in range(1, n + 1) if j != i]
        for j in others[: lam[i - 1]]:
            pairs.add((min(i, j) - 1, max(i, j) - 1))
    edges = tuple(Edge(u, v) for u, v in sorted(pairs))
    g = Graph(
        kind="threshold",
        labels=tuple(range(1, n + 1)),
        edges=edges,
        degree_sequence=tuple(lam),
    )
    realized = g.degrees()
    if realized != tuple(lam):
        raise NotThresholdSequence(
            f"rule realizes degrees {realized}, not {tuple(lam)}"
        )
    return g


def conjugate(lam: PartitionLike) -> Partition:
    """Conjugate partition: k-th part counts parts of lam that are >= k."""
    lam = _coerce_partition(lam)
    if not lam.parts or lam.parts[0] == 0:
        return Partition(())
    return Partition(tuple(sum(1 for p in lam if p >= k) for k in range(1, lam.parts[0] + 1)))


def durfee(lam: PartitionLike) -> int:
    """Side of the largest square fitting in the partition diagram."""
    lam = _coerce_partition(lam)
    s = 0
    for i, p in enumerate(lam.parts, start=1):
        if p >= i:
            s = i
    return s


def connected_threshold_sequences(n: int) -> list[Partition]:
    """All degree sequences of connected threshold graphs on n vertices.

    Generated by creation sequences (each new vertex is added isolated or
    dominating; connectivity forces the last addition to dominate),
    deduplicated by degree sequence.
    """
    if n < 1:
        raise InvalidSize("need at least one vertex")
    if n == 1:
        return [Partition((0,))]
    seqs: set[tuple[int, ...]] = set()
    n_ops = n - 1
    for mask in range(1 << (n_ops - 1)):
        ops = [(mask >> k) & 1 for k in range(n_ops - 1)] + [1]  # 1 = dominating
        adj = [set() for _ in range(n)]
        for v_new in range(1, n):
            if ops[v_new - 1]:
                for w in range(v_new):
                    adj[v_new].add(w)
                    adj[w].add(v_new)
        degs = tuple(sorted((len(a) for a in adj), reverse=True))
        seqs.add(degs)
    return [Partition(t) for t in sorted(seqs, reverse=True)]
