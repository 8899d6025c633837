import random

from hypothesis import given, settings
from hypothesis import strategies as st

from dp1.egraph import (
    CliqueQuery,
    build_graph,
    color_sort,
    eleven_extends,
    extensions,
    is_Kn,
    max_clique,
    sample_clique,
)
from dp1.picard import partner_indices

G = build_graph()


def test_row_histograms():
    assert all(G.row_histogram(i) == {0: 56, 1: 126, 2: 56, 3: 1} for i in range(240))


def test_max_cliques_and_witnesses():
    r = max_clique(G, CliqueQuery({1, 2, 3}))
    assert r.size == 16 and G.is_clique(r.witness, {1, 2, 3})
    assert is_Kn(G, r.witness) == 8
    r = max_clique(G, CliqueQuery({1, 2}))
    assert r.size == 12 and G.is_clique(r.witness, {1, 2})
    assert not is_Kn(G, r.witness)


def test_partner_free_pairs():
    assert max_clique(G, CliqueQuery({3})).size == 2
    assert max_clique(G, CliqueQuery({1, 3})).size == 16


def test_find_one_of_size():
    r = max_clique(G, CliqueQuery({1, 2}, mode="find_one_of_size", size=10))
    assert r.found and len(r.witness) >= 10
    r = max_clique(G, CliqueQuery({1, 2}, mode="find_one_of_size", size=13))
    assert not r.found


@given(st.integers(0, 2**32), st.integers(1, 60))
def test_colour_bound_is_proper(seed, k):
    adj = G.masks({1, 2})
    rng = random.Random(seed)
    P = 0
    for v in rng.sample(range(240), k):
        P |= 1 << v
    order, colours = color_sort(adj, P)
    assert sorted(order) == [v for v in range(240) if P >> v & 1]
    # vertices with equal colour are pairwise non-adjacent
    by_colour = {}
    for v, c in zip(order, colours):
        by_colour.setdefault(c, []).append(v)
    for vs in by_colour.values():
        assert all(not (adj[a] >> b & 1) for a in vs for b in vs if a != b)


@given(st.integers(0, 2**32))
@settings(max_examples=20)
def test_sampled_cliques_are_cliques(seed):
    adj = G.masks({1, 2})
    c, _ = sample_clique(adj, 11, random.Random(seed))
    assert G.is_clique(c, {1, 2})
    assert extensions(adj, c) != 0


def test_is_Kn_rejects_missing_partner():
    p = partner_indices()
    assert is_Kn(G, [0, p[0]]) == 1
    assert not is_Kn(G, [0])


def test_eleven_extends_small_sample():
    rep = eleven_extends(G, samples=200, seed=1)
    assert rep.ok and rep.extended == 200


def test_eleven_extends_exhaustive():
    rep = eleven_extends(G, exhaustive=True)
    assert rep.mode == "exhaustive"
    assert rep.ok and rep.samples > 0
