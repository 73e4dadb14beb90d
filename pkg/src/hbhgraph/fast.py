"""Linear-space recognition driven by the squares family.

Everything here runs in rank space.  Vertex ``n`` stands for "no vertex" in
the sigma labels, which makes it compare above every real vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import DegreeOrdering, Graph
from .squares import find_triangle
from .witness import HBH, Witness, WitnessKind

NONE = -1


@dataclass
class UnsafeDominationDigraph:
    """Forest of dominations found along unsafe triples.

    ``out[a]`` is the single out-neighbor of ``a`` (a rank) or -1.  An edge
    ``a -> b`` means ``b`` dominates ``a`` and ``b`` ranks above ``a``.
    """

    out: list[int]

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in enumerate(self.out) if b != NONE]

    def in_lists(self) -> list[list[int]]:
        inn: list[list[int]] = [[] for _ in self.out]
        for a, b in enumerate(self.out):
            if b != NONE:
                inn[b].append(a)
        return inn


@dataclass
class SafeTripleList:
    """Safe triples as parallel rank lists: ``high[i]`` dominates ``low[i]``."""

    high: list[int] = field(default_factory=list)
    low: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.high)

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.high, self.low))


@dataclass
class SquaresStats:
    triples: int = 0
    sum_l: int = 0
    unsafe: int = 0


@dataclass
class UScan:
    """Everything a successful pass over the squares family produces."""

    u: UnsafeDominationDigraph
    safe: SafeTripleList
    stats: SquaresStats
    # singleton[a] is True when some triple has L = {a}
    singleton: list[bool]
    # unsafe[a] is True when a lies in the common list of some unsafe triple
    unsafe: list[bool]


def build_u_digraph(g: Graph, o: Optional[DegreeOrdering] = None) -> Union[UScan, Witness]:
    """One top-down pass: classify every triple and grow U, or return a bad C4.

    The graph must be triangle-free; this is not re-checked.
    """
    n = g.n
    radj, up, links, rdeg = g.radj, g.up, g.links, g.rdeg
    dominates = g.rank_dominates
    out = [NONE] * n
    inn: list[Optional[set[int]]] = [None] * n
    unsafe = [False] * n
    reach = [NONE] * n
    hi = [0] * n
    singleton = [False] * n
    safe = SafeTripleList()
    stats = SquaresStats()

    for v in range(n - 1, -1, -1):
        nv = radj[v]
        lv = links[v]
        fam: dict[int, list[int]] = {}
        for i in range(up[v], len(nv)):
            a = nv[i]
            row = radj[a]
            for j in range(lv[i] + 1, len(row)):
                w = row[j]
                lst = fam.get(w)
                if lst is None:
                    fam[w] = [a]
                else:
                    lst.append(a)

        if fam:
            # REACH: walk the in-forest of U upward-closed at v
            if inn[v]:
                stack = list(inn[v])
                while stack:
                    x = stack.pop()
                    reach[x] = v
                    kids = inn[x]
                    if kids:
                        stack.extend(kids)
            stats.triples += len(fam)
            for w, lst in fam.items():
                k = len(lst)
                stats.sum_l += k
                if k == 1:
                    singleton[lst[0]] = True
                if k == rdeg[w] - hi[w] and (not unsafe[w] or reach[w] == v):
                    safe.high.append(v)
                    safe.low.append(w)
                    continue
                stats.unsafe += 1
                for j in range(k - 1):
                    b, a = lst[j], lst[j + 1]
                    cur = out[a]
                    if cur == NONE:
                        if not dominates(b, a):
                            return Witness(WitnessKind.NON_DOMINATED_C4, tuple(g.to_ids((v, a, w, b))))
                        out[a] = b
                        s = inn[b]
                        if s is None:
                            inn[b] = {a}
                        else:
                            s.add(a)
                    elif cur != b:
                        return Witness(WitnessKind.NON_DOMINATED_C4, tuple(g.to_ids((v, a, w, b))))
                for a in lst:
                    unsafe[a] = True

        for x in nv:
            h = hi[x] + 1
            hi[x] = h
            if h == rdeg[x] and out[x] != NONE:
                inn[out[x]].discard(x)  # type: ignore[union-attr]

    return UScan(UnsafeDominationDigraph(out), safe, stats, singleton, unsafe)


def build_sigma(g: Graph, o: Optional[DegreeOrdering], u: UnsafeDominationDigraph,
                safe: SafeTripleList) -> list[int]:
    """sigma in rank space; the value ``g.n`` plays the role of "none"."""
    n = g.n
    sig = [n if b == NONE else b for b in u.out]
    for v, w in zip(safe.high, safe.low):
        if v < sig[w]:
            sig[w] = v
    return sig


def sigma_ids(g: Graph, sig: list[int]) -> list[Optional[int]]:
    """Translate rank-space sigma labels to ids (None for "no vertex")."""
    order = g.ordering.order
    res: list[Optional[int]] = [None] * g.n
    for r, s in enumerate(sig):
        res[order[r]] = None if s == g.n else order[s]
    return res


def find_induced_c5_fast(g: Graph, o: Optional[DegreeOrdering], sig: list[int]) -> Optional[Witness]:
    """Look for a 5-cycle whose top vertex v0 sees sigma above v0 on both far vertices."""
    n = g.n
    radj, up, links = g.radj, g.up, g.links
    stamp = [NONE] * n
    via = [0] * n
    for v in range(n - 1, -1, -1):
        nv = radj[v]
        lv = links[v]
        ring = []
        for i in range(up[v], len(nv)):
            w1 = nv[i]
            row = radj[w1]
            for j in range(lv[i] + 1, len(row)):
                x = row[j]
                if sig[x] > v and stamp[x] != v:
                    stamp[x] = v
                    via[x] = w1
                    ring.append(x)
        if len(ring) < 2:
            continue
        for x in ring:
            row = radj[x]
            for j in range(up[x], len(row)):
                y = row[j]
                if stamp[y] == v:
                    return Witness(WitnessKind.INDUCED_C5, tuple(g.to_ids((v, via[x], x, y, via[y]))))
    return None


def _x_pointers(g: Graph, sig: list[int]) -> list[list[list[int]]]:
    """``xp[z][j]`` is X(v, sigma(z)) for ``v = radj[z][j]``.

    X(v, s) collects the neighbors of ``v`` whose sigma is ``s``; each
    neighborhood is partitioned this way and every entry points at its part.
    """
    radj, links = g.radj, g.links
    xp: list[list] = [[None] * len(row) for row in radj]
    for v in range(g.n):
        groups: dict[int, list[int]] = {}
        lv = links[v]
        for i, z in enumerate(radj[v]):
            s = sig[z]
            part = groups.get(s)
            if part is None:
                part = groups[s] = []
            part.append(z)
            xp[z][lv[i]] = part
    return xp


def find_induced_c6_fast(g: Graph, o: Optional[DegreeOrdering], sig: list[int]) -> Optional[Witness]:
    n = g.n
    radj, up, links = g.radj, g.up, g.links
    xp = _x_pointers(g, sig)
    in_nv = [NONE] * n
    in_n2 = [NONE] * n
    mark = [NONE] * n
    mark_w1 = [0] * n
    mark_w2 = [0] * n
    for v in range(n - 1, -1, -1):
        nv = radj[v]
        if len(nv) - up[v] < 2:
            continue
        lv = links[v]
        for x in nv:
            in_nv[x] = v
        found_n2 = False
        for i in range(up[v], len(nv)):
            row = radj[nv[i]]
            for j in range(lv[i] + 1, len(row)):
                x = row[j]
                if sig[x] > v:
                    in_n2[x] = v
                    found_n2 = True
        if not found_n2:
            continue
        for i in range(up[v], len(nv)):
            w1 = nv[i]
            row = radj[w1]
            xrow = xp[w1]
            seen = set()
            for j in range(lv[i] + 1, len(row)):
                w2 = row[j]
                if in_n2[w2] != v:
                    continue
                part = xrow[j]
                key = id(part)
                if key in seen:
                    continue
                seen.add(key)
                for w3 in part:
                    if in_nv[w3] == v or w3 == v:
                        continue
                    if mark[w3] != v:
                        mark[w3] = v
                        mark_w1[w3] = w1
                        mark_w2[w3] = w2
                    elif mark_w2[w3] != w2:
                        cyc = (v, mark_w1[w3], mark_w2[w3], w3, w2, w1)
                        return Witness(WitnessKind.INDUCED_C6, tuple(g.to_ids(cyc)))
    return None


@dataclass
class FastRun:
    """Result of the fast pipeline with intermediate products kept for reporting."""

    verdict: Union[Witness, str]
    scan: Optional[UScan] = None
    sigma: Optional[list[int]] = None


def run_fast(g: Graph) -> FastRun:
    t = find_triangle(g)
    if t is not None:
        return FastRun(Witness(WitnessKind.TRIANGLE, t))
    scan = build_u_digraph(g)
    if isinstance(scan, Witness):
        return FastRun(scan)
    sig = build_sigma(g, None, scan.u, scan.safe)
    w = find_induced_c5_fast(g, None, sig)
    if w is None:
        w = find_induced_c6_fast(g, None, sig)
    return FastRun(HBH if w is None else w, scan, sig)


def recognize_hbh_fast(g: Graph) -> Union[Witness, str]:
    return run_fast(g).verdict
