import itertools

import pytest

from hbhgraph import Biclique, build_graph
from hbhgraph import oracle as orc
from hbhgraph.generators import complete_bipartite, cycle, fig2, ladder, path, tree
from hbhgraph.oracle import (
    CatalogSpec,
    OracleDisagreement,
    catalog,
    oracle_cycles,
    oracle_domination_pairs,
    oracle_forbidden_subgraph,
    oracle_is_c4_dominated,
    oracle_is_hbh,
    oracle_is_hbh_definitional,
    oracle_max_bicliques,
)


def _naive_max_bicliques(g):
    """Straight subset enumeration: every pair of disjoint nonempty sets, then keep the maximal ones."""
    n = g.n
    found = []
    for labels in itertools.product((0, 1, 2), repeat=n):
        a = [v for v in range(n) if labels[v] == 1]
        b = [v for v in range(n) if labels[v] == 2]
        if not a or not b or a[0] > b[0]:
            continue
        if any(g.has_edge(x, y) for s in (a, b) for x, y in itertools.combinations(s, 2)):
            continue
        if all(g.has_edge(x, y) for x in a for y in b):
            found.append((frozenset(a), frozenset(b)))
    maximal = [
        (a, b) for a, b in found
        if not any((a | b) < (c | d) and ((a <= c and b <= d) or (a <= d and b <= c)) for c, d in found)
    ]
    return sorted(Biclique.of(a, b) for a, b in maximal)


def test_max_bicliques_examples():
    assert oracle_max_bicliques(path(4)) == [Biclique((0, 2), (1,)), Biclique((1, 3), (2,))]
    assert oracle_max_bicliques(complete_bipartite(2, 3)) == [Biclique((0, 1), (2, 3, 4))]
    assert oracle_max_bicliques(path(2)) == [Biclique((0,), (1,))]
    assert len(oracle_max_bicliques(cycle(6))) == 6
    # a triangle: each edge is a maximal biclique
    assert len(oracle_max_bicliques(cycle(3))) == 3
    assert oracle_max_bicliques(build_graph([], 3)) == []


def test_max_bicliques_matches_naive_enumeration():
    for g in catalog(CatalogSpec(max_n=5)):
        assert oracle_max_bicliques(g) == _naive_max_bicliques(g)
    for g in catalog(CatalogSpec(max_n=7, min_n=6, random_count=60, seed=3)):
        assert oracle_max_bicliques(g) == _naive_max_bicliques(g)


def test_max_bicliques_refuses_large_graphs():
    with pytest.raises(ValueError):
        oracle_max_bicliques(path(17))


def test_cycles():
    k4 = build_graph(list(itertools.combinations(range(4), 2)), 4)
    assert len(oracle_cycles(k4, 3)) == 4
    assert len(oracle_cycles(k4, 4)) == 3
    assert oracle_cycles(k4, 4, induced=True) == []
    assert oracle_cycles(cycle(6), 6) == [(0, 1, 2, 3, 4, 5)]
    with pytest.raises(ValueError):
        oracle_cycles(k4, 7)


def test_c4_domination():
    assert oracle_is_c4_dominated(cycle(4)) == (True, None)
    ok, c = oracle_is_c4_dominated(ladder(1))
    assert not ok and sorted(c) == [0, 1, 2, 3]


def test_helly_helper():
    assert orc._is_helly([0b011, 0b110, 0b101]) is False
    assert orc._is_helly([0b0111, 0b0110, 0b1100])
    assert orc._is_helly([0b1, 0b10])


def test_hbh_examples():
    assert oracle_is_hbh(complete_bipartite(2, 3))
    assert oracle_is_hbh(tree(9, seed=3))
    assert oracle_is_hbh(cycle(4))
    assert not oracle_is_hbh(cycle(3))
    assert not oracle_is_hbh(cycle(5))
    assert not oracle_is_hbh(cycle(6))
    for i in (1, 2, 3):
        g = ladder(i)
        assert not oracle_is_hbh_definitional(g)
        assert oracle_forbidden_subgraph(g) == f"ladder{i}"
        # every proper induced subgraph of a ladder is fine
        for v in range(g.n):
            keep = [u for u in range(g.n) if u != v]
            sub = build_graph([(keep.index(a), keep.index(b)) for a, b in g.edges() if v not in (a, b)], 7)
            assert oracle_is_hbh(sub)
    assert not oracle_is_hbh(fig2())


def test_disagreement_is_raised(monkeypatch):
    monkeypatch.setattr(orc, "oracle_forbidden_subgraph", lambda g: "C5")
    with pytest.raises(OracleDisagreement):
        orc.oracle_is_hbh(path(3))


def test_hbh_routes_agree_exhaustively_small():
    for g in catalog(CatalogSpec(max_n=5)):
        oracle_is_hbh(g)


def test_domination_pairs():
    assert oracle_domination_pairs(path(3)) == {(0, 2), (2, 0)}


def test_catalog_counts():
    assert sum(1 for _ in catalog(CatalogSpec(max_n=3))) == 1 + 1 + 2 + 8
    tf = list(catalog(CatalogSpec(max_n=3, triangle_free=True)))
    assert len(tf) == 11
    con = list(catalog(CatalogSpec(max_n=3, min_n=3, connected=True)))
    assert len(con) == 4
    rnd = list(catalog(CatalogSpec(max_n=9, min_n=7, random_count=20, seed=1)))
    assert len(rnd) == 20 and all(7 <= g.n <= 9 for g in rnd)
    again = list(catalog(CatalogSpec(max_n=9, min_n=7, random_count=20, seed=1)))
    assert [g.edges() for g in rnd] == [g.edges() for g in again]
    with pytest.raises(ValueError):
        list(catalog(CatalogSpec(max_n=9)))
    for g in catalog(CatalogSpec(max_n=4, twin_free=True)):
        assert len({frozenset(g.neighbors(v)) for v in range(g.n)}) == g.n
