import itertools

import pytest

from chaincalc.derivorders import validate_delta
from chaincalc.graphs import ROOT, graph, reaches
from chaincalc.quotient import (
    catalan_pairing,
    classify,
    epsilon_block,
    glue,
    pairings,
    preorder,
    quotient_trees,
)


def test_classify():
    assert classify((1, 1, -1, -1)) == "catalan"
    assert classify((-1, 1)) == "anticatalan"
    assert classify((1, -1, -1, 1)) == "neither"
    assert classify((1, 1)) == "neither"


def test_classify_odd_length_rejected():
    with pytest.raises(ValueError):
        classify((1, -1, 1))


def test_pairings_examples():
    assert pairings((1, -1)) == [((1, 2),)]
    assert pairings((1, -1, 1, -1)) == [((1, 2), (3, 4)), ((1, 4), (2, 3))]
    assert pairings((1, 1, -1, -1)) == [((1, 4), (2, 3))]


def test_glue_examples():
    t = glue((1, 1, -1, -1), ((1, 4), (2, 3)))
    assert t.graph == graph(["v2", "v3"], [("v2", ROOT), ("v3", "v2")])

    star = glue((1, -1, 1, -1), ((1, 2), (3, 4)))
    assert star.graph == graph(["v2", "v4"], [("v2", ROOT), ("v4", ROOT)])

    bent = glue((1, -1, 1, -1), ((1, 4), (2, 3)))
    assert bent.graph == graph(["v2", "v3"], [("v2", ROOT), ("v2", "v3")])


def test_glue_rejects_bad_pairings():
    with pytest.raises(ValueError):
        glue((1, -1, 1, -1), ((1, 3), (2, 4)))  # orientation-incompatible
    with pytest.raises(ValueError):
        glue((1, 1, -1, -1), ((1, 3), (2, 4)))  # crossing
    with pytest.raises(ValueError):
        glue((1, -1), ((1, 1),))


def test_catalan_pairing_examples():
    assert catalan_pairing((1, 1, -1, -1)) == ((1, 4), (2, 3))
    assert catalan_pairing((1, -1)) == ((1, 2),)
    assert catalan_pairing((1, -1, 1, -1)) == ((1, 2), (3, 4))
    with pytest.raises(ValueError):
        catalan_pairing((1, -1, -1, 1))


def test_preorder_on_star_and_chain():
    star = glue((1, -1, 1, -1), ((1, 2), (3, 4)))
    assert preorder(star) == (ROOT, "v2", "v4")
    chain = glue((1, 1, -1, -1), ((1, 4), (2, 3)))
    assert preorder(chain) == (ROOT, "v2", "v3")


def test_preorder_contour_structure():
    # plane tree: root with three children; first and third carry three
    # leaves each, the middle is a leaf (ten vertices in total)
    eps = (1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1, -1, 1, -1, -1)
    assert classify(eps) == "catalan"
    t = glue(eps, catalan_pairing(eps))
    order = preorder(t)
    assert len(order) == 10 and order[0] == ROOT
    g = t.graph
    children = {v: [w for w in g.labels if (w, v) in g.edges] for v in g.vertices()}
    assert [len(children[v]) for v in order] == [3, 3, 0, 0, 0, 0, 3, 0, 0, 0]
    # contour order: first child's subtree, then the leaf, then the last child
    assert children[order[1]] == sorted(order[2:5])
    assert children[order[6]] == sorted(order[7:10])
    assert children[ROOT] == sorted([order[1], order[5], order[6]])


def test_epsilon_block_examples():
    assert epsilon_block((1, 1)) == (1, -1, 1, -1)
    assert epsilon_block((1,)) == (1, -1)
    assert epsilon_block((1, 2)) == (1, 1, -1, 1, -1, -1)
    assert classify(epsilon_block((2, 3, 3))) == "catalan"


def test_epsilon_block_rejects_bad_input():
    with pytest.raises(ValueError):
        epsilon_block((2, 1))
    with pytest.raises(ValueError):
        epsilon_block(())
    with pytest.raises(ValueError):
        epsilon_block((0, 1))


def test_quotient_trees_counts():
    assert len(quotient_trees((1, -1))) == 1
    assert len(quotient_trees((1, -1, 1, -1))) == 2
    assert len(quotient_trees((1, 1, -1, -1))) == 1


def _catalan_sequences(n):
    for eps in itertools.product((1, -1), repeat=n):
        if classify(eps) == "catalan":
            yield eps


def test_every_gluing_is_a_tree():
    for n in (2, 4, 6, 8):
        for eps in _catalan_sequences(n):
            for t in quotient_trees(eps):
                g = t.graph
                assert len(g.edges) == len(g.labels)
                assert len(t.sigma) == len(g.labels)


def test_catalan_pairing_unique_uniform_direction():
    for n in (2, 4, 6, 8, 10):
        for eps in _catalan_sequences(n):
            uniform = [
                sigma for sigma in pairings(eps) if _all_toward_root(glue(eps, sigma))
            ]
            assert uniform == [catalan_pairing(eps)], eps


def _all_toward_root(t):
    g = t.graph
    return all(reaches(g, ROOT, v) for v in g.labels)


def test_no_edge_away_from_root_for_catalan():
    for n in (2, 4, 6, 8):
        for eps in _catalan_sequences(n):
            for t in quotient_trees(eps):
                assert not any(a == ROOT for a, _ in t.graph.edges), (eps, t)


def test_preorder_is_valid_derivative_order_on_catalan_pairing():
    for n in (2, 4, 6, 8, 10):
        for eps in _catalan_sequences(n):
            t = glue(eps, catalan_pairing(eps))
            assert validate_delta(t.graph, preorder(t)[1:]), eps


def test_embedding_lists_every_incident_edge():
    t = glue((1, -1, 1, -1), ((1, 4), (2, 3)))
    emb = t.embedding
    for v in t.graph.vertices():
        incident = {e for e in t.graph.edges if v in e}
        assert set(emb[v]) == incident
