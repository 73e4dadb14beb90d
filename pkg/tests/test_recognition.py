import random

import pytest
from hypothesis import given, settings

from hbhgraph import (
    HBH,
    Witness,
    WitnessKind,
    build_graph,
    build_sigma,
    build_u_digraph,
    domination_matrix,
    find_induced_c5_fast,
    find_induced_c5_slow,
    find_induced_c6_fast,
    find_induced_c6_slow,
    find_non_dominated_c4_slow,
    recognize_hbh_fast,
    recognize_hbh_slow,
    run_fast,
    sigma_ids,
    validate_witness,
    witness_problems,
)
from hbhgraph.generators import complete_bipartite, cycle, fig2, ladder, path, random_hbh, tree
from hbhgraph.oracle import oracle_cycles, oracle_domination_pairs, oracle_is_c4_dominated

from conftest import assert_u_forest, bipartite_graphs, graphs, random_triangle_free

ENGINES = [recognize_hbh_fast, recognize_hbh_slow]


@pytest.mark.parametrize("engine", ENGINES)
def test_named_verdicts(engine):
    assert engine(complete_bipartite(2, 3)) == HBH
    assert engine(tree(40, seed=1)) == HBH
    assert engine(path(1)) == HBH
    assert engine(build_graph([], 0)) == HBH
    assert engine(cycle(3)).kind is WitnessKind.TRIANGLE
    assert engine(cycle(5)).kind is WitnessKind.INDUCED_C5
    assert engine(cycle(6)).kind is WitnessKind.INDUCED_C6
    assert engine(cycle(4)) == HBH
    for i in (1, 2, 3):
        w = engine(ladder(i))
        assert w.kind is WitnessKind.NON_DOMINATED_C4
        assert validate_witness(ladder(i), w)
    assert engine(fig2()).kind is WitnessKind.NON_DOMINATED_C4


def test_witness_string():
    w = Witness(WitnessKind.INDUCED_C5, (0, 1, 2, 3, 4))
    assert str(w) == "InducedC5 0 1 2 3 4"


def test_validator_rejects_bad_witnesses():
    c6 = cycle(6)
    assert validate_witness(c6, Witness(WitnessKind.INDUCED_C6, (0, 1, 2, 3, 4, 5)))
    assert witness_problems(c6, Witness(WitnessKind.INDUCED_C6, (0, 2, 1, 3, 4, 5)))
    assert witness_problems(c6, Witness(WitnessKind.INDUCED_C5, (0, 1, 2, 3, 4)))
    assert witness_problems(c6, Witness(WitnessKind.INDUCED_C6, (0, 1, 2)))
    assert witness_problems(c6, Witness(WitnessKind.INDUCED_C6, (0, 1, 2, 3, 4, 4)))
    chord = build_graph([(i, (i + 1) % 5) for i in range(5)] + [(0, 2)], 5)
    assert any("chord" in p for p in witness_problems(chord, Witness(WitnessKind.INDUCED_C5, (0, 1, 2, 3, 4))))
    # C4 whose opposite corners are twins is dominated
    c4 = cycle(4)
    assert witness_problems(c4, Witness(WitnessKind.NON_DOMINATED_C4, (0, 1, 2, 3)))
    lad = ladder(1)
    assert validate_witness(lad, Witness(WitnessKind.NON_DOMINATED_C4, (0, 1, 2, 3)))
    tri = cycle(3)
    assert validate_witness(tri, Witness(WitnessKind.TRIANGLE, (0, 1, 2)))
    assert witness_problems(path(3), Witness(WitnessKind.TRIANGLE, (0, 1, 2)))


def test_domination_matrix_matches_oracle_on_random_graphs():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 12)
        g = build_graph([(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35], n)
        d = domination_matrix(g)
        pairs = oracle_domination_pairs(g)
        rank = g.ordering.rank
        for v in range(n):
            for w in range(n):
                if v == w:
                    continue
                assert d.dominates(rank[v], rank[w]) == ((v, w) in pairs)
                assert d.comparable(rank[v], rank[w]) == ((v, w) in pairs or (w, v) in pairs)
                if rank[v] > rank[w]:
                    assert d.entry(rank[v], rank[w]) == ((v, w) in pairs)


@settings(max_examples=300, deadline=None)
@given(bipartite_graphs(max_n=11))
def test_c4_detectors_match_oracle(g):
    ok, _ = oracle_is_c4_dominated(g)
    slow = find_non_dominated_c4_slow(g)
    fast = build_u_digraph(g)
    assert (slow is None) == ok
    assert (not isinstance(fast, Witness)) == ok
    if slow is not None:
        assert validate_witness(g, slow)
    if isinstance(fast, Witness):
        assert validate_witness(g, fast)
    else:
        assert_u_forest(g, fast)
        for v, w in fast.safe.pairs():
            assert v > w and g.rank_dominates(v, w)


def test_c5_slow_matches_oracle_on_triangle_free_graphs():
    rng = random.Random(11)
    for _ in range(600):
        g = random_triangle_free(rng, rng.randint(5, 10), rng.uniform(0.2, 0.7))
        w = find_induced_c5_slow(g)
        # in a triangle-free graph every 5-cycle is induced
        assert (w is not None) == bool(oracle_cycles(g, 5))
        if w is not None:
            assert validate_witness(g, w)


def test_c6_slow_matches_oracle_on_in_class_graphs():
    rng = random.Random(12)
    seen = 0
    tries = 0
    while seen < 400 and tries < 20000:
        tries += 1
        g = random_triangle_free(rng, rng.randint(6, 10), rng.uniform(0.2, 0.7))
        if not oracle_is_c4_dominated(g)[0]:
            continue
        seen += 1
        w = find_induced_c6_slow(g)
        assert (w is not None) == bool(oracle_cycles(g, 6, induced=True))
        if w is not None:
            assert validate_witness(g, w)
    assert seen == 400


def test_fast_stage_detectors_match_slow():
    rng = random.Random(13)
    checked = 0
    for _ in range(3000):
        g = random_triangle_free(rng, rng.randint(5, 10), rng.uniform(0.2, 0.7))
        scan = build_u_digraph(g)
        if isinstance(scan, Witness):
            continue
        checked += 1
        sig = build_sigma(g, None, scan.u, scan.safe)
        c5 = find_induced_c5_fast(g, None, sig)
        assert (c5 is None) == (find_induced_c5_slow(g) is None)
        if c5 is not None:
            assert validate_witness(g, c5)
            continue
        c6 = find_induced_c6_fast(g, None, sig)
        assert (c6 is None) == (find_induced_c6_slow(g) is None)
        if c6 is not None:
            assert validate_witness(g, c6)
    assert checked > 500


def _oracle_sigma(g, scan):
    """sigma from the definition: the lowest of the U target and every safe-triple high.

    Safe highs are found by brute force: v above w, N(w) inside N(v), and a
    common neighbor below v.
    """
    rank = g.ordering.rank
    nb = [set(g.neighbors(v)) for v in range(g.n)]
    res = {}
    for w in range(g.n):
        cands = []
        t = scan.u.out[rank[w]]
        if t != -1:
            cands.append(g.ordering.order[t])
        for v in range(g.n):
            if rank[v] > rank[w] and nb[w] <= nb[v] and any(rank[a] < rank[v] for a in nb[w]):
                cands.append(v)
        res[w] = min(cands, key=rank.__getitem__) if cands else None
    return res


def test_sigma_on_p4():
    g = path(4)
    run = run_fast(g)
    assert run.verdict == HBH
    sig = sigma_ids(g, run.sigma)
    assert sig[0] == 2
    assert sig[2] is None and sig[1] is None


@settings(max_examples=200, deadline=None)
@given(bipartite_graphs(max_n=11))
def test_sigma_is_a_dominator(g):
    scan = build_u_digraph(g)
    if isinstance(scan, Witness):
        return
    sig = sigma_ids(g, build_sigma(g, None, scan.u, scan.safe))
    assert dict(enumerate(sig)) == _oracle_sigma(g, scan)
    pairs = oracle_domination_pairs(g)
    for w, s in enumerate(sig):
        if s is not None:
            assert (s, w) in pairs
            assert g.ordering.rank[s] > g.ordering.rank[w]


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_engines_agree(g):
    a = recognize_hbh_fast(g)
    b = recognize_hbh_slow(g)
    if a == HBH or b == HBH:
        assert a == b
    else:
        assert a.kind is b.kind
        assert validate_witness(g, a) and validate_witness(g, b)


def test_random_hbh_is_recognized():
    for seed in range(5):
        g = random_hbh(1500, seed=seed)
        assert recognize_hbh_fast(g) == HBH
    g = random_hbh(600, seed=9)
    assert recognize_hbh_slow(g) == HBH
