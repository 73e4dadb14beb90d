"""Brute-force reference implementations for small graphs.

Nothing here shares code with the algorithms it is used to check: every
routine works from plain neighbor bitmasks and exhaustive search.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional

import networkx as nx
from networkx.algorithms import isomorphism

from .graph import Biclique, Graph, build_graph


def _masks(g: Graph) -> list[int]:
    res = []
    for v in range(g.n):
        m = 0
        for w in g.neighbors(v):
            m |= 1 << w
        res.append(m)
    return res


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


# -- domination ----------------------------------------------------------


def oracle_domination_pairs(g: Graph) -> set[tuple[int, int]]:
    """All ordered pairs (v, w), v != w, with N(w) a subset of N(v)."""
    nb = [set(g.neighbors(v)) for v in range(g.n)]
    return {(v, w) for v in range(g.n) for w in range(g.n) if v != w and nb[w] <= nb[v]}


# -- cycles --------------------------------------------------------------


def oracle_cycles(g: Graph, k: int, induced: bool = False) -> list[tuple[int, ...]]:
    """Every k-cycle once, as the rotation/reflection starting at its minimum id."""
    if k not in (3, 4, 5, 6):
        raise ValueError("cycle length must be between 3 and 6")
    nb = [set(g.neighbors(v)) for v in range(g.n)]
    found = set()

    def extend(path: list[int]) -> None:
        if len(path) == k:
            if path[0] in nb[path[-1]] and path[1] < path[-1]:
                found.add(tuple(path))
            return
        for x in nb[path[-1]]:
            if x > path[0] and x not in path:
                path.append(x)
                extend(path)
                path.pop()

    for s in range(g.n):
        extend([s])
    cycles = sorted(found)
    if induced:
        cycles = [c for c in cycles if _chordless(nb, c)]
    return cycles


def _chordless(nb: list[set[int]], c: tuple[int, ...]) -> bool:
    k = len(c)
    for i in range(k):
        for j in range(i + 2, k):
            if (i, j) != (0, k - 1) and c[j] in nb[c[i]]:
                return False
    return True


def oracle_is_c4_dominated(g: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    nb = [set(g.neighbors(v)) for v in range(g.n)]

    def comparable(x: int, y: int) -> bool:
        return nb[x] <= nb[y] or nb[y] <= nb[x]

    for c in oracle_cycles(g, 4):
        if not comparable(c[0], c[2]) and not comparable(c[1], c[3]):
            return False, c
    return True, None


# -- bicliques ------------------------------------------------------------


def _maximal_independent_sets(nb: list[int], cand: int) -> Iterator[int]:
    """Bron-Kerbosch on the complement, restricted to the vertex mask ``cand``."""

    def rec(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot_pool = p | x
        u = (pivot_pool & -pivot_pool).bit_length() - 1
        # non-neighbors in the complement sense = neighbors in g
        for v in _bits(p & (nb[u] | (1 << u))):
            keep = ~(nb[v] | (1 << v))
            yield from rec(r | (1 << v), p & keep, x & keep)
            p &= ~(1 << v)
            x |= 1 << v

    if cand:
        yield from rec(0, cand, 0)


def _max_biclique_masks(nb: list[int], universe: int) -> set[tuple[int, int]]:
    """Maximal bicliques (both sides nonempty) of the subgraph induced by ``universe``."""
    found: set[tuple[int, int]] = set()
    verts = _bits(universe)

    def common(side: int) -> int:
        acc = universe
        for v in _bits(side):
            acc &= nb[v]
        return acc

    # Grow independent sets X one vertex at a time (ascending), pruning when
    # they no longer have a common neighbor.
    def walk(x: int, cn: int, start: int) -> None:
        for y in _maximal_independent_sets(nb, cn):
            if _dominating_within(nb, x, common(y)):
                pair = (x, y) if (x & -x) < (y & -y) else (y, x)
                found.add(pair)
        for i in range(start, len(verts)):
            v = verts[i]
            if x & nb[v]:
                continue
            cn2 = cn & nb[v]
            if cn2:
                walk(x | (1 << v), cn2, i + 1)

    for i, v in enumerate(verts):
        cn = universe & nb[v]
        if cn:
            walk(1 << v, cn, i + 1)
    return found


def _dominating_within(nb: list[int], x: int, cand: int) -> bool:
    """Is the independent set ``x`` maximal inside ``cand``?"""
    for u in _bits(cand & ~x):
        if not nb[u] & x:
            return False
    return True


def oracle_max_bicliques(g: Graph) -> list[Biclique]:
    if g.n > 16:
        raise ValueError("oracle_max_bicliques refuses graphs with more than 16 vertices")
    nb = _masks(g)
    pairs = _max_biclique_masks(nb, (1 << g.n) - 1)
    return sorted(Biclique.of(_bits(a), _bits(b)) for a, b in pairs)


# -- Helly and the hereditary property ----------------------------------------


def _is_helly(family: list[int]) -> bool:
    """Every pairwise-intersecting subfamily has a common element.

    It is enough to test the maximal pairwise-intersecting subfamilies, found as
    maximal cliques of the intersection graph.
    """
    k = len(family)
    if k < 3:
        return True
    meets = [0] * k
    for i in range(k):
        for j in range(k):
            if i != j and family[i] & family[j]:
                meets[i] |= 1 << j

    def rec(r: int, p: int, x: int, inter: int) -> bool:
        if not p and not x:
            return inter != 0
        for i in _bits(p):
            if not rec(r | (1 << i), p & meets[i], x & meets[i], inter & family[i]):
                return False
            p &= ~(1 << i)
            x |= 1 << i
        return True

    return rec(0, (1 << k) - 1, 0, -1)


_hbh_cache: dict[tuple[int, ...], bool] = {}


def _connected(nb: list[int], s: int) -> bool:
    start = s & -s
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= nb[v]
        nxt &= s & ~seen
        seen |= nxt
        frontier = nxt
    return seen == s


def _relabel(nb: list[int], s: int) -> tuple[int, ...]:
    vs = _bits(s)
    pos = {v: i for i, v in enumerate(vs)}
    out = []
    for v in vs:
        m = 0
        for w in _bits(nb[v] & s):
            m |= 1 << pos[w]
        out.append(m)
    return tuple(out)


def _subgraph_helly(key: tuple[int, ...]) -> bool:
    hit = _hbh_cache.get(key)
    if hit is None:
        nb = list(key)
        fam = [a | b for a, b in _max_biclique_masks(nb, (1 << len(nb)) - 1)]
        hit = _is_helly(fam)
        if len(_hbh_cache) > 500_000:
            _hbh_cache.clear()
        _hbh_cache[key] = hit
    return hit


def oracle_is_hbh_definitional(g: Graph) -> bool:
    """Check that every induced subgraph has a Helly family of maximal bicliques.

    Bicliques never straddle components, so connected vertex subsets suffice.
    Subsets are visited by increasing size, so small obstructions end the
    search early.
    """
    nb = _masks(g)
    n = g.n
    for size in range(3, n + 1):
        for combo in itertools.combinations(range(n), size):
            s = 0
            for v in combo:
                s |= 1 << v
            if not _connected(nb, s):
                continue
            if not _subgraph_helly(_relabel(nb, s)):
                return False
    return True


# Ladders: a 4-cycle v1 v2 v3 v4 with a private neighbor w_i hanging off each
# v_i, plus zero, one or two "rungs" joining w1 w2 and w3 w4.
_LADDER_BASE = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)]
LADDER_EDGES = {
    1: _LADDER_BASE,
    2: _LADDER_BASE + [(4, 5)],
    3: _LADDER_BASE + [(4, 5), (6, 7)],
}


def ladder(i: int) -> Graph:
    return build_graph(LADDER_EDGES[i], 8)


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


_LADDER_NX = {i: nx.Graph(LADDER_EDGES[i]) for i in LADDER_EDGES}


def oracle_forbidden_subgraph(g: Graph) -> Optional[str]:
    """Name of a forbidden induced subgraph present in ``g``, or None."""
    if oracle_cycles(g, 3):
        return "triangle"
    if oracle_cycles(g, 5, induced=True):
        return "C5"
    if oracle_cycles(g, 6, induced=True):
        return "C6"
    if g.n >= 8:
        h = _to_nx(g)
        for i, lad in _LADDER_NX.items():
            if isomorphism.GraphMatcher(h, lad).subgraph_is_isomorphic():
                return f"ladder{i}"
    return None


class OracleDisagreement(AssertionError):
    pass


def oracle_is_hbh(g: Graph) -> bool:
    """Hereditary biclique-Helly test by two independent routes that must agree."""
    a = oracle_is_hbh_definitional(g)
    b = oracle_forbidden_subgraph(g) is None
    if a != b:
        raise OracleDisagreement(f"definitional={a} forbidden-subgraph={b} on edges {g.edges()}")
    return a


# -- catalogs --------------------------------------------------------------


@dataclass(frozen=True)
class CatalogSpec:
    max_n: int
    triangle_free: bool = False
    c4_dominated: bool = False
    twin_free: bool = False
    connected: bool = False
    random_count: int = 0
    min_n: int = 0
    p: Optional[float] = None
    seed: int = 0


def _accept(g: Graph, spec: CatalogSpec) -> bool:
    if spec.triangle_free and oracle_cycles(g, 3):
        return False
    if spec.c4_dominated and not oracle_is_c4_dominated(g)[0]:
        return False
    if spec.twin_free:
        keys = [frozenset(g.neighbors(v)) for v in range(g.n)]
        if len(set(keys)) != g.n:
            return False
    if spec.connected and g.n > 0 and not nx.is_connected(_to_nx(g)):
        return False
    return True


def catalog(spec: CatalogSpec) -> Iterator[Graph]:
    """Exhaustive labeled graphs (``random_count == 0``) or a seeded G(n, p) stream."""
    if spec.random_count == 0:
        if spec.max_n > 8:
            raise ValueError("exhaustive catalogs stop at 8 vertices")
        for n in range(spec.min_n, spec.max_n + 1):
            pairs = list(itertools.combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                g = build_graph([pairs[i] for i in range(len(pairs)) if mask >> i & 1], n)
                if _accept(g, spec):
                    yield g
        return
    rng = random.Random(spec.seed)
    emitted = 0
    while emitted < spec.random_count:
        n = rng.randint(max(spec.min_n, 1), spec.max_n)
        p = spec.p if spec.p is not None else rng.uniform(0.1, 0.6)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
        g = build_graph(edges, n)
        if _accept(g, spec):
            emitted += 1
            yield g
