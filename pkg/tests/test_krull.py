import random

import pytest
from hypothesis import given, settings, strategies as st

from beiblock.blocks import validate_block_graph
from beiblock.generate import (
    GeneratorConfig,
    complete_graph,
    flower_graph,
    generate_block_graph,
    path_graph,
    spider_graph,
    star_graph,
)
from beiblock.graph import Graph, glue
from beiblock.krull import (
    DimWitness,
    certify_witness,
    krull_dim_linear,
    min_cutset_witness,
    traversal_witness,
)
from beiblock.oracle import CutSet, component_count, cutset_stats, enumerate_cutsets, krull_dim_bruteforce

from _corpus import all_block_graphs, free_gluing, random_corpus


def dim(g):
    return krull_dim_linear(validate_block_graph(g))


@pytest.mark.parametrize("m", range(1, 9))
def test_complete_graph(m):
    assert dim(complete_graph(m)) == m + 1


def test_examples(two_flower_graph):
    assert dim(spider_graph(3)) == 9
    assert dim(two_flower_graph) == 15
    assert dim(star_graph(3)) == 6


def test_disconnected_and_isolated():
    assert dim(Graph(1, ())) == 2
    assert dim(Graph(3, ())) == 6
    g = Graph.from_edges(7, [(1, 2), (3, 4), (4, 5), (4, 6)])
    # K2 + K_{1,3} + isolated vertex
    assert dim(g) == 3 + 6 + 2
    assert dim(g) == krull_dim_bruteforce(g)[0]


def test_min_cutset_witness_examples():
    w = min_cutset_witness(validate_block_graph(path_graph(6)))
    assert w.cutset.vertices == () and w.peel_sequence == ()
    w = min_cutset_witness(validate_block_graph(star_graph(3)))
    assert w.cutset.vertices == (1,) and w.peel_sequence == ((1, 3),)
    w = min_cutset_witness(validate_block_graph(flower_graph(2, 1)))
    assert w.cutset.vertices == (1,) and w.dimension == 10


def test_two_flower_witnesses(two_flower_graph):
    bd = validate_block_graph(two_flower_graph)
    w = min_cutset_witness(bd)
    assert w.peel_sequence == ((1, 3), (2, 3))
    assert w.dimension == 15
    tw = traversal_witness(bd)
    assert tw.peel_sequence == ((2, 4),)
    assert tw.dimension == 15


def _forge(g, peel, t=None, comps=None, dimension=None):
    verts = tuple(sorted(t if t is not None else (v for v, _ in peel)))
    c = comps if comps is not None else component_count(g, verts)
    cs = CutSet(verts, c, g.n)
    return DimWitness(cs, cs.dim_term if dimension is None else dimension, tuple(peel))


def test_certify_replays(two_flower_graph):
    assert certify_witness(two_flower_graph, _forge(two_flower_graph, [(2, 4)]))
    assert certify_witness(two_flower_graph, _forge(two_flower_graph, [(1, 3), (2, 3)]))
    # after v2 goes, v1 sits in two triangles only: clique degree 2, no longer peelable
    res = certify_witness(two_flower_graph, _forge(two_flower_graph, [(2, 4), (1, 3)]))
    assert not res and "not in two endblocks" in res.reason


def test_certify_rejects_leaf_peel():
    g = star_graph(3)
    res = certify_witness(g, _forge(g, [(2, 1)]))
    assert not res


def test_emitted_witnesses_certify():
    for g in random_corpus():
        bd = validate_block_graph(g)
        assert certify_witness(g, min_cutset_witness(bd))
        assert certify_witness(g, traversal_witness(bd))


def test_witness_is_a_cutset_with_matching_counts():
    for g in random_corpus()[:200]:
        bd = validate_block_graph(g)
        for w in (min_cutset_witness(bd), traversal_witness(bd)):
            cs = cutset_stats(g, w.cutset.vertices)
            assert cs.num_components == w.cutset.num_components
            assert w.dimension == cs.dim_term == krull_dim_linear(bd)


def test_exhaustive_block_graphs_up_to_ten_vertices():
    mismatches = []
    for g in all_block_graphs(10):
        lin = dim(g)
        if lin != krull_dim_bruteforce(g)[0]:
            mismatches.append(g)
    assert not mismatches


def test_peel_contributions():
    for g in random_corpus():
        bd = validate_block_graph(g)
        c = len(bd.components)
        for w in (min_cutset_witness(bd), traversal_witness(bd)):
            assert all(d - 2 >= 1 for _, d in w.peel_sequence)
            assert w.dimension == g.n + c + sum(d - 2 for _, d in w.peel_sequence)
            assert (w.dimension == g.n + c) == (w.peel_sequence == ())


def test_dimension_additive_under_free_gluing():
    for seed in range(200):
        g, g1, g2 = free_gluing(seed, max_n=40)
        assert dim(g) == dim(g1) + dim(g2) - 2


def test_height_additivity_with_oracle():
    """height P_T(G) = height P_T1(G1) + height P_T2(G2) on glued pairs, n <= 14."""
    rng = random.Random(8)
    checked = 0
    while checked < 40:
        _, g1, g2 = free_gluing(rng.randrange(10**9), max_n=14)
        b1, b2 = validate_block_graph(g1), validate_block_graph(g2)
        u1 = rng.choice([v for v in g1.vertices if b1.cdeg(v) == 1])
        u2 = rng.choice([v for v in g2.vertices if b2.cdeg(v) == 1])
        g = glue(g1, u1, g2, u2)
        to_g2 = {}
        nxt = g1.n + 1
        for v in g2.vertices:
            if v == u2:
                continue
            to_g2[nxt] = v
            nxt += 1
        h1 = {c.vertices: c.height for c in enumerate_cutsets(g1)}
        h2 = {c.vertices: c.height for c in enumerate_cutsets(g2)}
        for c in enumerate_cutsets(g):
            t1 = tuple(v for v in c.vertices if v <= g1.n and v != u1)
            t2 = tuple(sorted(to_g2[v] for v in c.vertices if v > g1.n))
            assert t1 in h1 and t2 in h2
            assert c.height == h1[t1] + h2[t2]
        checked += 1


@settings(max_examples=80, deadline=None)
@given(
    blocks=st.integers(1, 40),
    size=st.integers(2, 6),
    bias=st.sampled_from([0.0, 0.4, 0.9]),
    seed=st.integers(0, 2**31),
)
def test_linear_matches_peeling_on_larger_graphs(blocks, size, bias, seed):
    g = generate_block_graph(GeneratorConfig(blocks, size, bias), seed)
    bd = validate_block_graph(g)
    lin = krull_dim_linear(bd)
    w = min_cutset_witness(bd)
    tw = traversal_witness(bd)
    assert lin == w.dimension == tw.dimension
    assert certify_witness(g, tw)
