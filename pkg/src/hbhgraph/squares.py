"""Triangle search and the squares family of a triangle-free graph.

Both routines walk the vertices from the top of the degree ordering down.
For a lower neighbor ``a`` of the current top vertex ``v``, the cross-link
of the entry ``(v, a)`` gives the position of ``v`` inside ``radj[a]``; since
adjacency lists are descending, every later entry of ``radj[a]`` lies below
``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import DegreeOrdering, Graph


@dataclass(frozen=True)
class SquaresTriple:
    """``(high, low, common)`` with ``common`` = L(high, low), descending in the ordering."""

    high: int
    low: int
    common: tuple[int, ...]


def find_triangle(g: Graph, o: Optional[DegreeOrdering] = None) -> Optional[tuple[int, int, int]]:
    """Some triangle of ``g`` as three vertex ids, or None."""
    radj, up, links = g.radj, g.up, g.links
    mark = [-1] * g.n
    for v in range(g.n - 1, -1, -1):
        nv = radj[v]
        if len(nv) - up[v] < 2:
            continue
        lv = links[v]
        for i in range(up[v], len(nv)):
            mark[nv[i]] = v
        for i in range(up[v], len(nv)):
            a = nv[i]
            row = radj[a]
            for j in range(lv[i] + 1, len(row)):
                if mark[row[j]] == v:
                    return tuple(g.to_ids((v, a, row[j])))  # type: ignore[return-value]
    return None


def rank_squares(g: Graph) -> Iterator[tuple[int, dict[int, list[int]]]]:
    """Yield ``(v, {w: L(v, w)})`` in rank space for v from the top down.

    ``L`` lists are descending.  The graph must be triangle-free.  The dict is
    rebuilt per vertex, so peak scratch is one vertex's worth of triples.
    """
    radj, up, links = g.radj, g.up, g.links
    for v in range(g.n - 1, -1, -1):
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
        yield v, fam


def squares_stream(g: Graph, o: Optional[DegreeOrdering] = None) -> Iterator[tuple[int, list[SquaresTriple]]]:
    """Yield ``(v, triples)`` for every vertex id, from the top of the ordering down."""
    order = g.ordering.order
    for v, fam in rank_squares(g):
        triples = [
            SquaresTriple(order[v], order[w], tuple(order[a] for a in fam[w]))
            for w in sorted(fam, reverse=True)
        ]
        yield order[v], triples


def squares_of(g: Graph, o: Optional[DegreeOrdering], v: int) -> list[SquaresTriple]:
    """The squares family of the single vertex ``v`` (an id)."""
    r = g.ordering.rank[v]
    radj, links = g.radj, g.links
    fam: dict[int, list[int]] = {}
    nv, lv = radj[r], links[r]
    for i in range(g.up[r], len(nv)):
        a = nv[i]
        row = radj[a]
        for j in range(lv[i] + 1, len(row)):
            fam.setdefault(row[j], []).append(a)
    order = g.ordering.order
    return [SquaresTriple(v, order[w], tuple(order[a] for a in fam[w])) for w in sorted(fam, reverse=True)]
