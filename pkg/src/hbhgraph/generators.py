"""Graph families used by the CLI, the benchmarks and the tests."""

from __future__ import annotations

import math
import random
from typing import Optional

from .graph import Graph, build_graph

LADDER_BASE = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)]
LADDERS = {
    1: LADDER_BASE,
    2: LADDER_BASE + [(4, 5)],
    3: LADDER_BASE + [(4, 5), (6, 7)],
}


def ladder(i: int) -> Graph:
    """Ladder ``i`` of the forbidden family: a 4-cycle 0-1-2-3 with pendants 4..7."""
    if i not in LADDERS:
        raise ValueError("ladder index must be 1, 2 or 3")
    return build_graph(LADDERS[i], 8)


def fig2() -> Graph:
    """Ladder 1 plus a vertex joined to two opposite corners of its 4-cycle."""
    return build_graph(LADDERS[1] + [(8, 0), (8, 2)], 9)


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph([(i, (i + 1) % k) for i in range(k)], k)


def path(k: int) -> Graph:
    return build_graph([(i, i + 1) for i in range(k - 1)], max(k, 0))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("side sizes must be non-negative")
    return build_graph([(i, a + j) for i in range(a) for j in range(b)], a + b)


def tree(n: int, seed: int = 0) -> Graph:
    """Uniform random recursive tree on ``n`` vertices."""
    rng = random.Random(seed)
    return build_graph([(v, rng.randrange(v)) for v in range(1, n)], n)


def random_bipartite(n: int, p: float, seed: int = 0) -> Graph:
    """G(n/2, n/2, p): each cross pair is an edge with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    half = n // 2
    other = n - half
    total = half * other
    edges = []
    if p > 0 and total:
        if p >= 1:
            picks = range(total)
        else:
            picks = _geometric_picks(rng, total, p)
        for k in picks:
            edges.append((k // other, half + k % other))
    return build_graph(edges, n)


def _geometric_picks(rng: random.Random, total: int, p: float):
    # skip sampling: gaps between successes are geometric
    log_q = math.log(1.0 - p)
    k = -1
    while True:
        k += 1 + int(math.log(1.0 - rng.random()) / log_q)
        if k >= total:
            return
        yield k


def _chain_block(rng: random.Random, t: int) -> tuple[list[tuple[int, int]], int, int]:
    """Bipartite chain graph on 2t vertices; returns edges, size, and an undominated vertex.

    Vertex i < t sees the first c_i vertices of the other side.  Vertex 0 sees
    all of them and vertex 1 sees only the first, so vertex 0 and vertex t are
    the unique undominated vertices of their sides.
    """
    edges = []
    for i in range(t):
        if i == 0:
            c = t
        elif i == 1:
            c = 1
        else:
            c = rng.randint(max(1, t // 2), t - 1)
        edges.extend((i, t + j) for j in range(c))
    return edges, 2 * t, 0


def _star_block(rng: random.Random, k: int) -> tuple[list[tuple[int, int]], int, int]:
    return [(0, j) for j in range(1, k + 1)], k + 1, 0


def random_hbh(n: int, seed: int = 0, density: float = 4.0, twin_rate: float = 0.05) -> Graph:
    """Random hereditary biclique-Helly graph with about ``density * n`` edges.

    Blocks (chain graphs, stars, single edges) are glued one at a time by
    identifying an undominated vertex of the new block with a vertex of the
    current graph that has no dominator; candidates failing that test are
    rejected and redrawn.  Occasionally a false twin of an existing vertex is
    added instead.  Every step keeps the graph triangle-free, free of long
    induced cycles and C4-dominated.
    """
    rng = random.Random(seed)
    adj: list[set[int]] = [set()]
    if n <= 1:
        return build_graph([], max(n, 0))
    # measured: blocks drawn this way add about 0.27 t edges per new vertex
    t = max(2, min(40, round(density / 0.27)))

    def undominated(v: int) -> bool:
        nbrs = adj[v]
        if not nbrs:
            return False
        first = min(nbrs, key=lambda x: len(adj[x]))
        common = set(adj[first])
        common.discard(v)
        for x in nbrs:
            if not common:
                return True
            common &= adj[x]
        return not common

    def glue(edges: list[tuple[int, int]], size: int, anchor: int, host: int) -> None:
        ids = []
        nxt = len(adj)
        for i in range(size):
            if i == anchor:
                ids.append(host)
            else:
                ids.append(nxt)
                nxt += 1
        adj.extend(set() for _ in range(size - 1))
        for a, b in edges:
            x, y = ids[a], ids[b]
            adj[x].add(y)
            adj[y].add(x)

    # seed block
    edges, size, _ = _chain_block(rng, min(t, max(1, n // 2)))
    adj = [set() for _ in range(size)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)

    while len(adj) < n:
        room = n - len(adj)
        roll = rng.random()
        if roll < twin_rate:
            v = rng.randrange(len(adj))
            if 0 < len(adj[v]) <= 2 * density:
                w = len(adj)
                adj.append(set(adj[v]))
                for x in adj[v]:
                    adj[x].add(w)
            continue
        host = rng.randrange(len(adj))
        if not undominated(host):
            continue
        if roll < 0.85 and room >= 3:
            tt = min(t, (room + 1) // 2)
            tt = max(2, rng.randint(max(2, tt // 2), tt))
            if 2 * tt - 1 > room:
                tt = max(2, (room + 1) // 2)
            edges, size, anchor = _chain_block(rng, tt)
        elif room >= 2:
            edges, size, anchor = _star_block(rng, rng.randint(1, min(room, 6)))
        else:
            edges, size, anchor = [(0, 1)], 2, 0
        if size - 1 > room:
            continue
        glue(edges, size, anchor, host)

    pairs = [(v, w) for v in range(len(adj)) for w in adj[v] if v < w]
    return build_graph(pairs, len(adj))


FAMILIES = ("tree", "ladder1", "ladder2", "ladder3", "fig2", "cycle",
            "complete-bipartite", "random-bipartite", "random-hbh")


def generate(family: str, params: list[str], seed: int = 0) -> Graph:
    """Build a member of a named family from string parameters (CLI helper)."""

    def need(k: int) -> None:
        if len(params) != k:
            raise ValueError(f"{family} takes {k} parameter(s), got {len(params)}")

    try:
        if family == "tree":
            need(1)
            return tree(int(params[0]), seed)
        if family in ("ladder1", "ladder2", "ladder3"):
            need(0)
            return ladder(int(family[-1]))
        if family == "fig2":
            need(0)
            return fig2()
        if family == "cycle":
            need(1)
            return cycle(int(params[0]))
        if family == "complete-bipartite":
            need(2)
            return complete_bipartite(int(params[0]), int(params[1]))
        if family == "random-bipartite":
            need(2)
            return random_bipartite(int(params[0]), float(params[1]), seed)
        if family == "random-hbh":
            need(1)
            return random_hbh(int(params[0]), seed)
    except ValueError as exc:
        raise ValueError(f"bad parameters for {family}: {exc}") from exc
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
