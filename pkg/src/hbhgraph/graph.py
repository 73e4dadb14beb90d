"""Immutable simple graphs with a fixed degree ordering.

Every algorithm in this package works on the *rank* of a vertex rather than
its id: rank ``r`` is the position of the vertex in the degree ordering, so
``u < v`` in the ordering is plain integer comparison of ranks.  Adjacency
lists are stored in rank space and sorted in descending rank order, which is
the order the square-finding routines consume them in.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class GraphInputError(ValueError):
    """Malformed graph input (bad ids, bad counts)."""


class SelfLoopError(GraphInputError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


@dataclass(frozen=True)
class DegreeOrdering:
    """A total order on vertices in which lower vertices never have larger degree.

    ``rank[v]`` is the position of vertex ``v``; ``order[r]`` is the vertex at
    position ``r``.  Ties in degree are broken by ascending vertex id.
    """

    rank: tuple[int, ...]
    order: tuple[int, ...]

    def less(self, v: int, w: int) -> bool:
        return self.rank[v] < self.rank[w]

    def max(self, vertices: Iterable[int]) -> int:
        return max(vertices, key=self.rank.__getitem__)

    def min(self, vertices: Iterable[int]) -> int:
        return min(vertices, key=self.rank.__getitem__)

    def above(self, v: int) -> list[int]:
        """MAX(v): every vertex ranked above ``v``."""
        return list(self.order[self.rank[v] + 1 :])

    def below(self, v: int) -> list[int]:
        """MIN(v): every vertex ranked below ``v``."""
        return list(self.order[: self.rank[v]])


class Graph:
    """Simple undirected graph, immutable after :func:`build_graph`.

    Attributes in rank space (used by the algorithms):

    ``radj[r]``
        neighbors of the vertex of rank ``r``, as ranks, strictly descending.
    ``rdeg[r]``
        degree of the vertex of rank ``r``.
    ``up[r]``
        how many entries of ``radj[r]`` rank above ``r``; ``radj[r][up[r]:]``
        is therefore the set of lower neighbors.
    """

    def __init__(self, n: int, m: int, ordering: DegreeOrdering, radj: list[list[int]]):
        self.n = n
        self.m = m
        self.ordering = ordering
        self.radj = radj
        self.rdeg = [len(a) for a in radj]
        up = [0] * n
        for r, nbrs in enumerate(radj):
            k = 0
            for x in nbrs:
                if x < r:
                    break
                k += 1
            up[r] = k
        self.up = up

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- id-space views -------------------------------------------------

    @property
    def rank(self) -> tuple[int, ...]:
        return self.ordering.rank

    @property
    def order(self) -> tuple[int, ...]:
        return self.ordering.order

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Neighbors of each vertex id, sorted by descending rank."""
        order, rank = self.ordering.order, self.ordering.rank
        return [[order[x] for x in self.radj[rank[v]]] for v in range(self.n)]

    def neighbors(self, v: int) -> list[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.rdeg[self.ordering.rank[v]]

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` id pairs with ``u < v``, sorted."""
        out = []
        for v, nbrs in enumerate(self.adjacency):
            out.extend((v, w) for w in nbrs if v < w)
        out.sort()
        return out

    def has_edge(self, u: int, v: int) -> bool:
        rank = self.ordering.rank
        return self.has_edge_rank(rank[u], rank[v])

    # -- rank-space helpers ------------------------------------------------

    @cached_property
    def _edge_keys(self) -> set[int]:
        n = self.n
        keys = set()
        for r, nbrs in enumerate(self.radj):
            for x in nbrs[self.up[r] :]:
                keys.add(x * n + r)
        return keys

    def has_edge_rank(self, a: int, b: int) -> bool:
        if a > b:
            a, b = b, a
        return a * self.n + b in self._edge_keys

    def rank_dominates(self, a: int, b: int) -> bool:
        """True iff N(b) is a subset of N(a) (ranks, ``a != b``)."""
        if self.rdeg[b] > self.rdeg[a]:
            return False
        n = self.n
        keys = self._edge_keys
        for x in self.radj[b]:
            if (x * n + a if x < a else a * n + x) not in keys:
                return False
        return True

    @cached_property
    def links(self) -> list[list[int]]:
        """Cross-links: ``links[r][i]`` is the index of ``r`` inside ``radj[radj[r][i]]``."""
        n = self.n
        fill = [0] * n
        links: list[list[int]] = [[] for _ in range(n)]
        for r in range(n - 1, -1, -1):
            row = links[r]
            for x in self.radj[r]:
                row.append(fill[x])
                fill[x] += 1
        return links

    def to_ids(self, ranks: Iterable[int]) -> list[int]:
        order = self.ordering.order
        return [order[r] for r in ranks]


@dataclass(frozen=True, order=True)
class Biclique:
    """An unordered pair of vertex sets, kept in canonical form.

    Each side is sorted ascending by id and the side holding the smaller
    minimum id comes first.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]

    @classmethod
    def of(cls, a: Iterable[int], b: Iterable[int]) -> "Biclique":
        sa, sb = tuple(sorted(a)), tuple(sorted(b))
        if not sa or (sb and sb[0] < sa[0]):
            sa, sb = sb, sa
        return cls(sa, sb)

    def vertices(self) -> frozenset[int]:
        return frozenset(self.left) | frozenset(self.right)

    def __len__(self) -> int:
        return len(self.left) + len(self.right)


def build_graph(edges: Iterable[Sequence[int]], n: int) -> Graph:
    """Build a graph on vertices ``0..n-1``; repeated edges are merged."""
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    pairs: set[tuple[int, int]] = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has a vertex outside [0, {n})")
        if u == v:
            raise SelfLoopError(u)
        pairs.add((u, v) if u < v else (v, u))

    deg = [0] * n
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    ordering = _ordering_from_degrees(deg)
    rank = ordering.rank

    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        ru, rv = rank[u], rank[v]
        nbrs[ru].append(rv)
        nbrs[rv].append(ru)
    # Appending in descending rank of the source yields descending lists.
    radj: list[list[int]] = [[] for _ in range(n)]
    for r in range(n - 1, -1, -1):
        for x in nbrs[r]:
            radj[x].append(r)
    return Graph(n, len(pairs), ordering, radj)


def _ordering_from_degrees(deg: Sequence[int]) -> DegreeOrdering:
    n = len(deg)
    buckets: list[list[int]] = [[] for _ in range(max(deg, default=0) + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)
    order = tuple(v for b in buckets for v in b)
    rank = [0] * n
    for r, v in enumerate(order):
        rank[v] = r
    return DegreeOrdering(tuple(rank), order)


def degree_order(g: Graph) -> DegreeOrdering:
    return g.ordering


def dominates(g: Graph, v: int, w: int) -> bool:
    """Whether ``v`` dominates ``w``, i.e. N(w) is a subset of N(v).

    Merge-scan of the two rank-sorted neighbor lists.
    """
    if v == w:
        raise ValueError("dominates() needs two distinct vertices")
    rank = g.ordering.rank
    a, b = g.radj[rank[v]], g.radj[rank[w]]
    if len(b) > len(a):
        return False
    i = 0
    la = len(a)
    for x in b:
        while i < la and a[i] > x:
            i += 1
        if i == la or a[i] != x:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class TwinPartition:
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    quotient: Graph

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


def reduce_twins(g: Graph) -> TwinPartition:
    """Collapse vertices with equal neighborhoods.

    Classes are numbered by their minimum member, which is also the class
    representative in the quotient graph.
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        key = tuple(g.radj[g.ordering.rank[v]])
        groups.setdefault(key, []).append(v)
    classes = sorted((tuple(c) for c in groups.values()), key=lambda c: c[0])
    class_of = [0] * g.n
    for i, c in enumerate(classes):
        for v in c:
            class_of[v] = i
    qedges = set()
    adjacency = g.adjacency
    for i, c in enumerate(classes):
        for u in adjacency[c[0]]:
            j = class_of[u]
            if i < j:
                qedges.add((i, j))
    quotient = build_graph(qedges, len(classes))
    return TwinPartition(tuple(class_of), tuple(classes), quotient)


def expand_biclique(p: TwinPartition, b: Biclique) -> Biclique:
    """Replace each quotient vertex of ``b`` by its whole twin class."""
    left = [v for c in b.left for v in p.classes[c]]
    right = [v for c in b.right for v in p.classes[c]]
    return Biclique.of(left, right)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``; returns it with the new-id -> old-id map."""
    new_id = {v: i for i, v in enumerate(vertices)}
    edges = []
    adjacency = g.adjacency
    for v in vertices:
        for w in adjacency[v]:
            if v < w and w in new_id:
                edges.append((new_id[v], new_id[w]))
    return build_graph(edges, len(vertices)), list(vertices)
