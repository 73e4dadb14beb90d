"""Maximal bicliques of triangle-free C4-dominated graphs.

For such a graph without twins, the maximal bicliques are exactly the sets
B(v) = {N(v), Dom(v) + v}.  Dom(v) is read off a digraph whose paths encode
every domination: the unsafe forest U, one edge per safe triple, and a few
extra edges out of low "degenerate" vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .fast import NONE, UScan, build_u_digraph
from .graph import (
    Biclique,
    DegreeOrdering,
    Graph,
    GraphInputError,
    TwinPartition,
    expand_biclique,
    induced_subgraph,
    reduce_twins,
)
from .squares import find_triangle
from .witness import NotInClassError, Witness, WitnessKind


class PreconditionError(GraphInputError):
    """The graph has twins or isolated vertices where neither is allowed."""


@dataclass
class DominationDigraph:
    """Rank-space domination digraph of a twin-free graph without isolated vertices.

    ``u_out`` is the unsafe forest; ``extra[w]`` lists the remaining
    out-neighbors of ``w`` (safe-triple targets, then dominator-set targets).
    """

    g: Graph
    scan: UScan
    u_out: list[int]
    extra: list[list[int]]
    degenerate: list[bool]
    safe_edges: int = 0
    dominator_edges: int = 0
    _tin: list[int] = field(default_factory=list, repr=False)
    _tout: list[int] = field(default_factory=list, repr=False)
    _depth: list[int] = field(default_factory=list, repr=False)

    @property
    def u_edges(self) -> int:
        return sum(1 for b in self.u_out if b != NONE)

    @property
    def s_edge_count(self) -> int:
        return self.u_edges + self.safe_edges

    @property
    def edge_count(self) -> int:
        return self.s_edge_count + self.dominator_edges

    def edges(self) -> list[tuple[int, int]]:
        """All edges as id pairs ``(w, v)`` meaning v dominates w."""
        order = self.g.ordering.order
        res = [(order[a], order[b]) for a, b in enumerate(self.u_out) if b != NONE]
        for w, targets in enumerate(self.extra):
            res.extend((order[w], order[v]) for v in targets)
        return res

    def _tour(self) -> None:
        if self._tin:
            return
        n = self.g.n
        kids: list[list[int]] = [[] for _ in range(n)]
        for a, b in enumerate(self.u_out):
            if b != NONE:
                kids[b].append(a)
        tin, tout, depth = [0] * n, [0] * n, [0] * n
        clock = 0
        for root in range(n):
            if self.u_out[root] != NONE:
                continue
            stack = [(root, 0)]
            while stack:
                x, state = stack.pop()
                if state == 0:
                    tin[x] = clock
                    clock += 1
                    stack.append((x, 1))
                    for c in kids[x]:
                        depth[c] = depth[x] + 1
                        stack.append((c, 0))
                else:
                    tout[x] = clock
        self._tin, self._tout, self._depth = tin, tout, depth

    def u_ancestor(self, x: int, w: int) -> bool:
        """Is there a nonempty U-path from ``w`` up to ``x`` (ranks)?"""
        self._tour()
        return x != w and self._tin[x] <= self._tin[w] < self._tout[x]

    def dom_ranks(self, w: int) -> list[int]:
        """Dom(w) in rank space: the U-path above ``w`` plus direct extra targets."""
        res = []
        x = self.u_out[w]
        while x != NONE:
            res.append(x)
            x = self.u_out[x]
        for x in self.extra[w]:
            if not self.u_ancestor(x, w):
                res.append(x)
        return res


@dataclass(frozen=True)
class DomCounts:
    """Per-vertex strict dominator counts and degenerate flags, indexed by id."""

    count: tuple[int, ...]
    degenerate: tuple[bool, ...]


def _check_in_class(g: Graph) -> UScan:
    t = find_triangle(g)
    if t is not None:
        raise NotInClassError(Witness(WitnessKind.TRIANGLE, t))
    scan = build_u_digraph(g)
    if isinstance(scan, Witness):
        raise NotInClassError(scan)
    return scan


def dominator_set(g: Graph, o: Optional[DegreeOrdering], scan: UScan, w: int) -> list[int]:
    """Dominators of ``w`` that the squares family cannot see (ids, ascending rank).

    Meant for a vertex with no U out-edge whose neighbors all rank above it.
    With ``z`` its lowest neighbor, it is empty when ``w`` sits in an unsafe
    common list or forms a whole common list by itself; otherwise every
    neighbor of ``z`` below ``z`` (other than ``w``) dominates ``w``.
    """
    r = g.ordering.rank[w]
    if g.rdeg[r] == 0:
        raise ValueError("dominator_set is undefined for isolated vertices")
    if scan.singleton[r] or scan.unsafe[r]:
        return []
    z = g.radj[r][-1]
    row = g.radj[z]
    return [g.ordering.order[x] for x in reversed(row[g.up[z]:]) if x != r]


def build_d_digraph(g: Graph, o: Optional[DegreeOrdering] = None) -> DominationDigraph:
    n = g.n
    radj, rdeg, up = g.radj, g.rdeg, g.up
    if any(d == 0 for d in rdeg):
        raise PreconditionError("graph has isolated vertices")
    if len({tuple(row) for row in radj}) != n:
        raise PreconditionError("graph has twins")
    scan = _check_in_class(g)
    out = scan.u.out
    extra: list[list[int]] = [[] for _ in range(n)]
    has_s_out = [b != NONE for b in out]
    safe_edges = 0
    for v, w in zip(scan.safe.high, scan.safe.low):
        has_s_out[w] = True
        if out[w] != v:
            extra[w].append(v)
            safe_edges += 1
    degenerate = [not has_s_out[w] and up[w] == rdeg[w] for w in range(n)]
    # Dominators of w that rank below its lowest neighbor z never show up in
    # a triple with low vertex w.  They matter only when w has no U out-edge
    # and all its neighbors are above it, whether or not w has safe out-edges.
    dominator_edges = 0
    for w in range(n):
        if out[w] != NONE or up[w] != rdeg[w] or scan.singleton[w] or scan.unsafe[w]:
            continue
        z = radj[w][-1]
        row = radj[z]
        targets = [x for x in reversed(row[up[z]:]) if x != w]
        extra[w].extend(targets)
        dominator_edges += len(targets)
    return DominationDigraph(g, scan, out, extra, degenerate, safe_edges, dominator_edges)


def _dom_counts_rank(d: DominationDigraph, weight: Optional[Sequence[int]] = None) -> list[int]:
    d._tour()
    n = d.g.n
    out = d.u_out
    # weighted length of the U-path above each vertex, filled top-down
    above = [0] * n
    for x in range(n - 1, -1, -1):
        b = out[x]
        if b != NONE:
            above[x] = above[b] + (1 if weight is None else weight[b])
    counts = above
    for w in range(n):
        for x in d.extra[w]:
            if not d.u_ancestor(x, w):
                counts[w] += 1 if weight is None else weight[x]
    return counts


def dom_counts(d: DominationDigraph, u=None) -> DomCounts:
    counts = _dom_counts_rank(d)
    order = d.g.ordering.order
    n = d.g.n
    c = [0] * n
    deg = [False] * n
    for r in range(n):
        c[order[r]] = counts[r]
        deg[order[r]] = d.degenerate[r]
    return DomCounts(tuple(c), tuple(deg))


def ancestors(d: DominationDigraph, v: int) -> list[int]:
    """Every vertex reachable from ``v`` along D's edges, as sorted ids."""
    g = d.g
    start = g.ordering.rank[v]
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        nxt = list(d.extra[x])
        if d.u_out[x] != NONE:
            nxt.append(d.u_out[x])
        for y in nxt:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    seen.discard(start)
    return sorted(g.to_ids(seen))


@dataclass
class _Reduced:
    core: Graph
    core_ids: list[int]
    isolated: list[int]
    twins: TwinPartition
    d: Optional[DominationDigraph]


def _reduce(g: Graph) -> _Reduced:
    """Class-check ``g``, drop isolated vertices and collapse twins."""
    _check_in_class(g)
    keep = [v for v in range(g.n) if g.degree(v) > 0]
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    core, core_ids = induced_subgraph(g, keep)
    tp = reduce_twins(core)
    d = build_d_digraph(tp.quotient) if tp.quotient.n else None
    return _Reduced(core, core_ids, isolated, tp, d)


@dataclass
class EnumerationReport:
    bicliques: list[Biclique]
    isolated: list[int]
    twin_classes: int
    d_edges: int = 0
    s_edges: int = 0
    output_size: int = 0


def enumerate_report(g: Graph) -> EnumerationReport:
    red = _reduce(g)
    if red.d is None:
        return EnumerationReport([], red.isolated, 0)
    d = red.d
    q = d.g
    n = q.n
    counts = _dom_counts_rank(d)
    rdeg = q.rdeg
    radj = q.radj
    order = q.ordering.order
    result = []
    for v in range(n):
        repeated = False
        for w in radj[v]:
            if w < v:
                break
            if counts[v] + 1 == rdeg[w] and rdeg[v] == counts[w] + 1:
                repeated = True
                break
        if repeated:
            continue
        left = [order[x] for x in radj[v]]
        right = [order[v]] + [order[x] for x in d.dom_ranks(v)]
        b = expand_biclique(red.twins, Biclique.of(left, right))
        result.append(Biclique.of([red.core_ids[x] for x in b.left], [red.core_ids[x] for x in b.right]))
    result.sort()
    o = sum(len(b) for b in result)
    return EnumerationReport(result, red.isolated, n, d.edge_count, d.s_edge_count, o)


def enumerate_max_bicliques(g: Graph) -> list[Biclique]:
    """All maximal bicliques with both sides nonempty, canonical and sorted.

    Raises :class:`NotInClassError` when ``g`` has a triangle or a
    non-dominated 4-cycle.  Isolated vertices belong to no biclique here.
    """
    return enumerate_report(g).bicliques


@dataclass(frozen=True)
class BicliqueReport:
    balanced: bool
    max_vertex: int
    max_edge: int


def biclique_optimizations(g: Graph, k: int) -> BicliqueReport:
    """Balanced / maximum-vertex / maximum-edge biclique answers for ``g``.

    ``balanced`` asks for a biclique with at least ``k`` vertices on each side.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    red = _reduce(g)
    if red.d is None:
        return BicliqueReport(False, 0, 0)
    d = red.d
    q = d.g
    order = q.ordering.order
    size = [len(red.twins.classes[order[r]]) for r in range(q.n)]
    weighted = _dom_counts_rank(d, size)
    balanced = False
    best_v = best_e = 0
    for r in range(q.n):
        a = sum(size[x] for x in q.radj[r])
        b = size[r] + weighted[r]
        balanced = balanced or min(a, b) >= k
        best_v = max(best_v, a + b)
        best_e = max(best_e, a * b)
    return BicliqueReport(balanced, best_v, best_e)
