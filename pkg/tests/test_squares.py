import itertools

from hypothesis import given, settings

from hbhgraph import SquaresTriple, build_graph, find_triangle, squares_of, squares_stream
from hbhgraph.generators import complete_bipartite, cycle, path, tree
from hbhgraph.oracle import oracle_cycles

from conftest import bipartite_graphs, graphs


def test_p4_has_no_squares_but_one_triple():
    # vertex 2 reaches 0 through 1; L(2, 0) = {1}
    g = path(4)
    trip = [t for _, ts in squares_stream(g) for t in ts]
    assert trip == [SquaresTriple(2, 0, (1,))]


def test_c4_single_triple():
    g = cycle(4)
    trip = [t for _, ts in squares_stream(g) for t in ts]
    # the square itself lives in (3, 1); the path 0-1-2 under 3 gives a singleton triple
    assert trip == [SquaresTriple(3, 1, (2, 0)), SquaresTriple(2, 0, (1,))]


def test_triangle_examples():
    assert sorted(find_triangle(build_graph([(0, 1), (1, 2), (2, 0)], 3))) == [0, 1, 2]
    assert find_triangle(tree(30, seed=2)) is None
    assert find_triangle(complete_bipartite(3, 4)) is None
    assert find_triangle(build_graph([], 0)) is None


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_triangle_matches_oracle(g):
    t = find_triangle(g)
    has = bool(oracle_cycles(g, 3))
    assert (t is not None) == has
    if t is not None:
        a, b, c = t
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)


def _brute_triples(g):
    """Every (v, w, L) with v above w and L the common neighbors below v."""
    rank = g.ordering.rank
    res = {}
    for v in range(g.n):
        for w in range(g.n):
            if rank[w] >= rank[v]:
                continue
            common = set(g.neighbors(v)) & set(g.neighbors(w))
            low = {a for a in common if rank[a] < rank[v]}
            if low:
                res[(v, w)] = low
    return res


@settings(max_examples=300, deadline=None)
@given(bipartite_graphs())
def test_squares_family_matches_brute_force(g):
    want = _brute_triples(g)
    got = {}
    for v, ts in squares_stream(g):
        assert ts == squares_of(g, None, v)
        for t in ts:
            assert t.high == v
            got[(t.high, t.low)] = set(t.common)
            ranks = [g.ordering.rank[a] for a in t.common]
            assert ranks == sorted(ranks, reverse=True)
    assert got == want


@settings(max_examples=300, deadline=None)
@given(bipartite_graphs())
def test_each_four_cycle_in_exactly_one_triple(g):
    rank = g.ordering.rank
    trip = [t for _, ts in squares_stream(g) for t in ts]
    for c in oracle_cycles(g, 4):
        top = max(c, key=rank.__getitem__)
        i = c.index(top)
        opp = c[(i + 2) % 4]
        sides = {c[(i + 1) % 4], c[(i + 3) % 4]}
        hits = [t for t in trip if t.high == top and t.low == opp and sides <= set(t.common)]
        assert len(hits) == 1
    # and every pair from a common list closes a 4-cycle
    for t in trip:
        for a, b in itertools.combinations(t.common, 2):
            assert g.has_edge(t.high, a) and g.has_edge(a, t.low)
            assert g.has_edge(t.high, b) and g.has_edge(b, t.low)
