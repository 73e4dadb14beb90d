"""Quadratic-space recognition built on an explicit domination matrix.

This is the straightforward O(nm) pipeline.  It is kept deliberately simple
and serves as a mid-scale reference for the fast engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import DegreeOrdering, Graph
from .squares import find_triangle, rank_squares
from .witness import HBH, Witness, WitnessKind


@dataclass
class DominationMatrix:
    """Bit-packed table over ranks.

    ``rows[b]`` has bit ``a`` set iff ``a`` dominates ``b`` (strictly, a != b)
    and ``a`` ranks above ``b``.  Only the higher-over-lower direction is
    recorded; :meth:`dominates` recovers the other direction through twins.
    """

    rows: list[int]
    rdeg: list[int]

    def entry(self, a: int, b: int) -> bool:
        return a > b and (self.rows[b] >> a) & 1 == 1

    def dominates(self, a: int, b: int) -> bool:
        """Full relation on ranks: does ``a`` dominate ``b``?"""
        if a > b:
            return (self.rows[b] >> a) & 1 == 1
        if a == b:
            return False
        # a lower vertex can only dominate a higher one of equal degree (twins)
        return self.rdeg[a] == self.rdeg[b] and (self.rows[a] >> b) & 1 == 1

    def comparable(self, a: int, b: int) -> bool:
        if a < b:
            a, b = b, a
        return (self.rows[b] >> a) & 1 == 1


def domination_matrix(g: Graph, o: Optional[DegreeOrdering] = None) -> DominationMatrix:
    # The vertices dominating b are the common neighbors of all of N(b).
    n = g.n
    nb = [0] * n
    for r, nbrs in enumerate(g.radj):
        bits = 0
        for x in nbrs:
            bits |= 1 << x
        nb[r] = bits
    everyone = (1 << n) - 1
    rows = [0] * n
    for b in range(n):
        acc = everyone
        for x in g.radj[b]:
            acc &= nb[x]
        # keep strictly higher ranks only
        rows[b] = (acc >> (b + 1)) << (b + 1)
    return DominationMatrix(rows, g.rdeg)


def find_non_dominated_c4_slow(g: Graph, o: Optional[DegreeOrdering] = None,
                               d: Optional[DominationMatrix] = None) -> Optional[Witness]:
    if d is None:
        d = domination_matrix(g)
    for v, fam in rank_squares(g):
        for w in sorted(fam, reverse=True):
            if d.entry(v, w):
                continue
            lst = fam[w]
            for j in range(len(lst) - 1):
                b, a = lst[j], lst[j + 1]
                if not d.entry(b, a):
                    return Witness(WitnessKind.NON_DOMINATED_C4, tuple(g.to_ids((v, a, w, b))))
    return None


def find_induced_c5_slow(g: Graph) -> Optional[Witness]:
    n = g.n
    radj = g.radj
    dist = [-1] * n
    via = [0] * n
    for v in range(n - 1, -1, -1):
        seen = [v]
        dist[v] = 0
        for a in radj[v]:
            dist[a] = 1
            seen.append(a)
        ring = []
        # ascending a, so via[] ends up holding the minimum-rank middle vertex
        for a in reversed(radj[v]):
            for w in radj[a]:
                if dist[w] < 0:
                    dist[w] = 2
                    via[w] = a
                    ring.append(w)
        for w in sorted(ring):
            for z in radj[w]:
                if dist[z] == 2:
                    return Witness(WitnessKind.INDUCED_C5, tuple(g.to_ids((v, via[w], w, z, via[z]))))
        for x in seen:
            dist[x] = -1
        for x in ring:
            dist[x] = -1
    return None


def find_induced_c6_slow(g: Graph, o: Optional[DegreeOrdering] = None,
                         d: Optional[DominationMatrix] = None) -> Optional[Witness]:
    if d is None:
        d = domination_matrix(g)
    n = g.n
    radj = g.radj
    for w0 in range(n - 1, -1, -1):
        in_n1 = [False] * n
        for x in radj[w0]:
            in_n1[x] = True
        # p(w2) = min N(w0 w2); walking N(w0) ascending keeps the first hit
        p = [-1] * n
        for w1 in reversed(radj[w0]):
            for w2 in radj[w1]:
                if w2 != w0 and p[w2] < 0:
                    p[w2] = w1
        in_n2 = [p[x] >= 0 and not d.dominates(x, w0) for x in range(n)]
        for w3 in range(n):
            if w3 == w0 or in_n1[w3]:
                continue
            cand = [u for u in radj[w3] if in_n2[u]]
            if len(cand) < 2:
                continue
            order = g.ordering.order
            cand.sort(key=lambda u: (p[u], order[u]))
            for i in range(len(cand) - 1):
                u, u2 = cand[i], cand[i + 1]
                if p[u] != p[u2] and not d.comparable(p[u], p[u2]):
                    return Witness(WitnessKind.INDUCED_C6, tuple(g.to_ids((w0, p[u], u, w3, u2, p[u2]))))
    return None


def recognize_hbh_slow(g: Graph) -> Union[Witness, str]:
    t = find_triangle(g)
    if t is not None:
        return Witness(WitnessKind.TRIANGLE, t)
    d = domination_matrix(g)
    for step in (lambda: find_non_dominated_c4_slow(g, None, d),
                 lambda: find_induced_c5_slow(g),
                 lambda: find_induced_c6_slow(g, None, d)):
        w = step()
        if w is not None:
            return w
    return HBH
