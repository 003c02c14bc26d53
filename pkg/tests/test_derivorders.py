import itertools
import random

import pytest

from chaincalc.chains import derive
from chaincalc.derivorders import (
    all_deltas,
    apply_delta,
    class_chain_sum,
    class_tree,
    compatible,
    delta_classes,
    equiv_d,
    equiv_o,
    greedy_compatible_delta,
    last_bend,
    layer_info,
    order_classes,
    same_layer,
    validate_delta,
)
from chaincalc.formal import LinComb
from chaincalc.graphs import ROOT, ROOT_ONLY, graph, linear_extensions
from chaincalc.quotient import classify, pairings, glue

from conftest import random_tree

CHAIN2 = graph(["a", "b"], [("a", ROOT), ("b", "a")])  # b -> a -> r
STAR = graph(["u", "v"], [("u", ROOT), ("v", ROOT)])
BENT = graph(["v2", "v3"], [("v2", ROOT), ("v2", "v3")])  # r < v2 > v3


def test_validate_delta_examples():
    assert validate_delta(CHAIN2, ("a", "b"))
    assert not validate_delta(CHAIN2, ("b", "a"))
    assert validate_delta(STAR, ("u", "v"))
    assert validate_delta(STAR, ("v", "u"))


def test_validate_delta_rejects_bad_labels():
    with pytest.raises(ValueError):
        validate_delta(CHAIN2, ("a", "z"))
    with pytest.raises(ValueError):
        validate_delta(CHAIN2, ("a", "a"))


def test_apply_delta_examples():
    sign, residual = apply_delta(CHAIN2, ("a", "b"))
    assert sign == 1 and residual == ROOT_ONLY
    sign, residual = apply_delta(BENT, ("v2", "v3"))
    assert sign == -1 and residual == ROOT_ONLY
    sign, residual = apply_delta(CHAIN2, ())
    assert sign == 1 and residual == CHAIN2


def test_all_deltas_examples():
    assert all_deltas(CHAIN2) == [("a", "b")]
    assert sorted(all_deltas(STAR)) == [("u", "v"), ("v", "u")]
    assert all_deltas(BENT) == [("v2", "v3")]


def test_all_deltas_are_exactly_ancestor_first_orders():
    rng = random.Random(71)
    for _ in range(40):
        g = random_tree(rng, rng.randint(1, 5))
        deltas = set(all_deltas(g))
        from chaincalc.derivorders import parents

        par = parents(g)
        for perm in itertools.permutations(g.labels):
            seen = set()
            ok = True
            for v in perm:
                if par[v] != ROOT and par[v] not in seen:
                    ok = False
                    break
                seen.add(v)
            assert (perm in deltas) == ok


def test_layer_info_examples():
    bent_down = graph(["a", "c"], [("a", ROOT), ("a", "c")])
    bend, _ = layer_info(bent_down, "c")
    assert bend == "a"
    assert last_bend(bent_down, "a") is None
    assert layer_info(bent_down, "a") == (None, "above")
    assert same_layer(STAR, "u", "v")
    assert not same_layer(bent_down, "a", "c")


def test_equiv_examples():
    assert not equiv_d(STAR, ("u", "v"), ("v", "u"))
    assert equiv_o(BENT, (ROOT, "v3", "v2"), ("v3", ROOT, "v2"))
    assert equiv_d(CHAIN2, ("a", "b"), ("a", "b"))


def test_compatible_examples():
    assert compatible(STAR, (ROOT, "u", "v"), ("u", "v"))
    assert not compatible(STAR, (ROOT, "u", "v"), ("v", "u"))
    assert compatible(STAR, (ROOT, "u", "v"), ())
    chain_nm = graph(
        ["a1", "a2", "b1"],
        [("a2", "a1"), (ROOT, "a2"), ("b1", ROOT)],  # a1 < a2 < r < b1
    )
    order = ("a1", "a2", ROOT, "b1")
    # on a chain, every valid removal order stays on the boundary
    assert compatible(chain_nm, order, ("a2", "b1", "a1"))
    assert compatible(chain_nm, order, ("b1", "a2", "a1"))
    with pytest.raises(ValueError):
        compatible(chain_nm, order, ("a1",))  # not a valid derivative order


def test_class_tree_star_class():
    t = class_tree(STAR, (ROOT, "u", "v"))
    assert t == graph(["u", "v"], [("u", ROOT), ("v", "u")])
    assert linear_extensions(t) == [(ROOT, "u", "v")]


def test_class_tree_chain_is_itself():
    t = class_tree(CHAIN2, (ROOT, "a", "b"))
    assert set(linear_extensions(t)) == set(linear_extensions(CHAIN2))


def test_class_tree_bent_class():
    t = class_tree(BENT, (ROOT, "v3", "v2"))
    assert set(linear_extensions(t)) == {(ROOT, "v3", "v2"), ("v3", ROOT, "v2")}


def _tree_family(max_nonroot=4, seed=73, extra=60):
    """Small oriented trees: all quotient trees plus random ones."""
    out = []
    for n in (2, 4, 6, 8):
        for eps in itertools.product((1, -1), repeat=n):
            if classify(eps) != "catalan":
                continue
            for sigma in pairings(eps):
                out.append(glue(eps, sigma).graph)
    rng = random.Random(seed)
    for _ in range(extra):
        out.append(random_tree(rng, rng.randint(1, max_nonroot)))
    return out


def test_class_tree_extensions_match_class():
    for g in _tree_family():
        for cls in order_classes(g):
            t = class_tree(g, cls[0])
            assert sorted(linear_extensions(t)) == sorted(cls), (g, cls)


def test_compatibility_bijection_between_classes():
    for g in _tree_family():
        oclasses = order_classes(g)
        dclasses = delta_classes(g)
        keyed = {tuple(sorted(c)): i for i, c in enumerate(dclasses)}
        images = []
        for ocls in oclasses:
            hits = set()
            for order in ocls:
                for delta in all_deltas(g):
                    if compatible(g, order, delta):
                        hits.add(keyed[_dkey(g, delta, dclasses)])
            assert len(hits) == 1, (g, ocls, hits)
            images.append(hits.pop())
        assert sorted(images) == list(range(len(dclasses))), g


def _dkey(g, delta, dclasses):
    for cls in dclasses:
        if delta in cls:
            return tuple(sorted(cls))
    raise AssertionError("delta not classified")


def test_derivatives_of_class_sums():
    # applying a derivative string to a class chain sum equals the chain sum
    # of the contracted class tree: zero exactly when the string is not a
    # valid removal prefix of the class
    from chaincalc.graphs import chains_comb, derive_graph

    for g in _tree_family(max_nonroot=4, extra=25):
        dclasses = delta_classes(g)
        oclasses = order_classes(g)
        pairs = _match_classes(g, oclasses, dclasses)
        assert len(pairs) == len(oclasses) == len(dclasses)
        for ocls, dcls in pairs:
            sum_chain = class_chain_sum(g, ocls)
            ctree = class_tree(g, ocls[0])
            prefixes = {d[:k] for d in all_deltas(g) for k in (1, 2) if len(d) >= k}
            for prefix in prefixes:
                applied = sum_chain
                graphs_side = LinComb.term(ctree)
                for a in prefix:
                    applied = derive(applied, a)
                    graphs_side = graphs_side.map_terms(
                        lambda h, a=a: derive_graph(h, a)
                    )
                assert applied == chains_comb(graphs_side), (g, ocls, prefix)
                matching = [d for d in dcls if d[: len(prefix)] == prefix]
                assert bool(matching) == bool(applied), (g, ocls, prefix)


def _match_classes(g, oclasses, dclasses):
    out = []
    for ocls in oclasses:
        delta = greedy_compatible_delta(g, ocls[0])
        for dcls in dclasses:
            if delta in dcls:
                out.append((ocls, dcls))
                break
    return out


def test_sign_is_orientation_count():
    rng = random.Random(79)
    for _ in range(60):
        g = random_tree(rng, rng.randint(1, 5))
        toward = sum(1 for a, b in g.edges if _toward_root(g, a, b))
        for delta in all_deltas(g):
            sign, _ = apply_delta(g, delta)
            assert sign == (-1) ** toward


def _toward_root(g, a, b):
    # edge (a, b): does it point at the root side of the tree path?
    from chaincalc.derivorders import parents

    if a == ROOT:
        return False
    return parents(g)[a] == b
