"""Recursive vertex coloring, the colored target element and the bijection.

For the block sequence of a weakly increasing tuple ``l`` (m blocks, total
L), every pair (gluing, linear extension) gets a coloring of the tree's
vertices by 1..m.  Sink classes are colored directly: the above-root prefix
gets the top color, the glued polygon loses its outer blocks, the freed
boundary is reglued by the balanced pairing and the remainder is colored one
level down with all orientations flipped.  Every other class pulls its colors
back along the pairing walk, positionwise in the derivative orders.

Reading each extension's colors as a root-split chain and summing over all
pairs reproduces the target element: the sum over prefix-dominated
multiplicity tuples of products of constant-embedded color blocks with an
all-top-color right factor.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .chains import Chain, ROOT, RPoly, embed, mul_all
from .derivorders import (
    above_root,
    delta_class_of,
    greedy_compatible_delta,
    parents,
    validate_delta,
)
from .formal import LinComb
from .graphs import linear_extensions
from .involution import (
    Configuration,
    apply_involution,
    class_configs,
    is_sink,
    sink_prefix,
    sink_representative,
    step_pairs,
)
from .polynomials import poly_of
from .quotient import (
    PlanarQuotientTree,
    catalan_pairing,
    epsilon_block,
    glue,
    negate,
    pairings,
    preorder,
)


def color_label(i: int) -> str:
    return f"c{i}"


def color_index(label: str) -> int:
    return int(label[1:])


# ---------------------------------------------------------------------------
# the target element


def admissible_tuples(l: Sequence[int], total: int) -> List[Tuple[int, ...]]:
    """Nonnegative tuples summing to ``total`` whose prefixes are dominated
    by the prefixes of ``l`` (the last coordinate is unconstrained)."""
    l = tuple(l)
    m = len(l)
    caps = list(itertools.accumulate(l))
    out: List[Tuple[int, ...]] = []

    def rec(i: int, acc: List[int], ssum: int):
        if i == m - 1:
            last = total - ssum
            if last >= 0:
                out.append(tuple(acc) + (last,))
            return
        hi = min(total - ssum, caps[i] - ssum)
        for s in range(hi + 1):
            acc.append(s)
            rec(i + 1, acc, ssum + s)
            acc.pop()

    if m == 1:
        return [(total,)] if total >= 0 else []
    rec(0, [], 0)
    return out


def color_target(l: Sequence[int]) -> RPoly:
    """Sum over admissible multiplicity tuples of the product of constant
    embeddings of the low-color blocks with the all-top-color right factor."""
    l = tuple(l)
    m = len(l)
    if m == 0:
        return LinComb.term(Chain((), ()))
    total = sum(l)
    acc = LinComb()
    for s in admissible_tuples(l, total):
        factors = [embed((color_label(i + 1),) * s[i]) for i in range(m - 1)]
        tail = LinComb.term(Chain((), (color_label(m),) * s[m - 1]))
        acc = acc + mul_all(factors + [tail])
    return acc


# ---------------------------------------------------------------------------
# coloring of configurations


def _class_key(cfg: Configuration) -> tuple:
    members = delta_class_of(cfg.tree.graph, cfg.delta)
    return (cfg.tree, min(members))


_COLOR_CACHE: Dict[tuple, Dict[str, int]] = {}


def vertex_colors(cfg: Configuration, l: Sequence[int]) -> Dict[str, int]:
    """Coloring of the configuration's tree vertices by 1..len(l).

    Well defined on equivalence classes of derivative orders; colors agree
    positionwise along the involution, so every class inherits its coloring
    from the sink of its component.
    """
    l = tuple(l)
    key = (_class_key(cfg), l)
    hit = _COLOR_CACHE.get(key)
    if hit is not None:
        return hit
    if len(l) == 1:
        colors = {v: 1 for v in cfg.tree.graph.labels}
    elif is_sink(cfg):
        colors = _sink_colors(sink_representative(cfg), l)
    else:
        colors = None
        count = len(above_root(cfg.tree.graph))
        for rep in class_configs(cfg):
            img = apply_involution(rep)
            if img is not None and len(above_root(img.tree.graph)) < count:
                sub = vertex_colors(img, l)
                colors = {
                    rep.delta[j]: sub[img.delta[j]] for j in range(len(rep.delta))
                }
                break
        if colors is None:
            raise AssertionError("non-sink class admits no descending pairing step")
    _COLOR_CACHE[key] = colors
    return colors


def _sink_colors(cfg: Configuration, l: Tuple[int, ...]) -> Dict[str, int]:
    """Color a sink representative: top color on the above-root preorder
    prefix, then unglue those edges, drop the outer blocks, reglue the freed
    boundary by the balanced pairing and recurse one level down, mirrored."""
    tree, delta = cfg.tree, cfg.delta
    m = len(l)
    lm = l[-1]
    eps = tree.eps
    n2 = len(eps)
    prefix = sink_prefix(tree)
    k = len(prefix)
    if tuple(delta[:k]) != prefix:
        raise ValueError("not a sink representative")
    colors = {v: m for v in prefix}
    if k == len(delta):
        return colors

    removed_pairs = step_pairs(cfg)[:k]
    decorated = {i for p in removed_pairs for i in p}
    outer = set(range(1, lm + 1)) | set(range(n2 - lm + 1, n2 + 1))
    if not outer <= decorated:
        raise AssertionError("outer blocks must be among the unglued edges")

    keep = sorted(set(range(1, n2 + 1)) - outer)
    new_pos = {old: s for s, old in enumerate(keep, start=1)}
    eps2 = tuple(eps[o - 1] for o in keep)
    if eps2 != negate(epsilon_block(l[:-1])):
        raise AssertionError("residual polygon must mirror the next level down")

    kept_pairs = []
    for a, b in tree.sigma:
        if a in decorated or b in decorated:
            continue
        kept_pairs.append((new_pos[a], new_pos[b]))
    freed = sorted(new_pos[o] for o in decorated - outer)
    freed_eps = tuple(eps2[d - 1] for d in freed)
    matched = catalan_pairing(freed_eps) if freed else ()
    new_pairs = [(freed[a - 1], freed[b - 1]) for a, b in matched]
    reduced = glue(eps2, kept_pairs + new_pairs)

    # map surviving vertices of the original polygon into the residual one
    span = n2 - 2 * lm

    def vmap(t: int) -> Optional[int]:
        if lm + 1 <= t <= n2 + 1 - lm:
            return (t - lm - 1) % span + 1
        return None

    survivor_name: Dict[str, str] = {}
    for v in delta[k:]:
        cls = next(c for c in tree.classes if tree.names[c] == v)
        images = {reduced.name_of(vmap(t)) for t in cls if vmap(t) is not None}
        if len(images) != 1:
            raise AssertionError("surviving vertex class mapped inconsistently")
        survivor_name[v] = images.pop()

    par = parents(reduced.graph)
    freed_children = []
    for pair in new_pairs:
        edge = next(e for e, p in reduced.provenance.items() if p == tuple(sorted(pair)))
        a, b = edge
        child = a if par.get(a) == b else b
        freed_children.append(child)
    pos = {v: j for j, v in enumerate(preorder(reduced))}
    freed_children.sort(key=pos.get)

    delta2 = tuple(freed_children) + tuple(survivor_name[v] for v in delta[k:])
    mirrored = glue(negate(eps2), reduced.sigma)
    if not validate_delta(mirrored.graph, delta2):
        raise AssertionError("residual derivative order is invalid")
    sub = vertex_colors(Configuration(mirrored, delta2), l[:-1])
    for v in delta[k:]:
        colors[v] = sub[survivor_name[v]]
    return colors


def coloring_for_order(
    t: PlanarQuotientTree, order: Sequence[str], l: Sequence[int]
) -> Dict[str, int]:
    """Coloring attached to a linear extension through any compatible order."""
    delta = greedy_compatible_delta(t.graph, tuple(order))
    return vertex_colors(Configuration(t, delta), l)


# ---------------------------------------------------------------------------
# the colored sum and the bijection


def all_pairs(l: Sequence[int]) -> List[Tuple[PlanarQuotientTree, Tuple[str, ...]]]:
    """Every (gluing, linear extension) pair for the block sequence of l."""
    eps = epsilon_block(tuple(l))
    out = []
    for sigma in pairings(eps):
        t = glue(eps, sigma)
        for order in linear_extensions(t.graph):
            out.append((t, order))
    return out


def _order_chain(order: Sequence[str], colors: Dict[str, int]) -> Chain:
    i = tuple(order).index(ROOT)
    left = tuple(color_label(colors[v]) for v in order[:i])
    right = tuple(color_label(colors[v]) for v in order[i + 1:])
    return Chain(left, right)


def colored_sum(l: Sequence[int]) -> RPoly:
    """Sum over all pairs of the extension's color chain, with multiplicity."""
    l = tuple(l)
    acc = []
    for t, order in all_pairs(l):
        colors = coloring_for_order(t, order, l)
        acc.append((_order_chain(order, colors), 1))
    return LinComb(acc)


def bijection_forward(
    t: PlanarQuotientTree, order: Sequence[str], l: Sequence[int]
) -> Tuple[int, ...]:
    """Colors of all vertices in extension order, the root painted with the
    top color."""
    l = tuple(l)
    m = len(l)
    colors = coloring_for_order(t, order, l)
    return tuple(m if v == ROOT else colors[v] for v in order)


def sequence_set(l: Sequence[int]) -> List[Tuple[int, ...]]:
    """All color sequences of length L+1 obeying the prefix-count caps."""
    l = tuple(l)
    m = len(l)
    total = sum(l) + 1
    caps = list(itertools.accumulate(l))
    out: List[Tuple[int, ...]] = []

    def ok(seq: Tuple[int, ...]) -> bool:
        for i in range(1, m):
            if sum(1 for x in seq if x <= i) > caps[i - 1]:
                return False
        return True

    for seq in itertools.product(range(1, m + 1), repeat=total):
        if ok(seq):
            out.append(seq)
    return out


def _sequence_valid(seq: Tuple[int, ...], l: Tuple[int, ...]) -> bool:
    m = len(l)
    if len(seq) != sum(l) + 1 or any(not 1 <= x <= m for x in seq):
        return False
    caps = list(itertools.accumulate(l))
    return all(sum(1 for x in seq if x <= i) <= caps[i - 1] for i in range(1, m))


def bijection_table(l: Sequence[int]) -> Dict[Tuple[int, ...], tuple]:
    """Exhaustive forward table; the oracle for the constructive inverse."""
    out: Dict[Tuple[int, ...], tuple] = {}
    for t, order in all_pairs(l):
        seq = bijection_forward(t, order, l)
        if seq in out:
            raise AssertionError(f"forward map collides on {seq}")
        out[seq] = (t, order)
    return out


def bijection_inverse(
    seq: Sequence[int], l: Sequence[int], mode: str = "constructive"
) -> Tuple[PlanarQuotientTree, Tuple[str, ...]]:
    """Unique pair mapping to the sequence.

    The constructive mode locates the root at the first occurrence of the top
    color (every later occurrence is a vertex right of the root), then per
    gluing and order class rebuilds the extension position by position from
    the class coloring.  The table mode replays the forward enumeration.
    """
    l = tuple(l)
    seq = tuple(int(x) for x in seq)
    m = len(l)
    if not _sequence_valid(seq, l):
        raise ValueError("sequence outside the image set")
    if mode == "table":
        table = bijection_table(l)
        if seq not in table:
            raise ValueError("sequence outside the image set")
        return table[seq]
    if mode != "constructive":
        raise ValueError("mode must be 'constructive' or 'table'")

    root_pos = seq.index(m)
    eps = epsilon_block(l)
    from .derivorders import order_classes, equiv_o

    for sigma in pairings(eps):
        t = glue(eps, sigma)
        for cls in order_classes(t.graph):
            rep = cls[0]
            colors = coloring_for_order(t, rep, l)
            for order in _realize_orders(t, colors, seq, root_pos):
                if equiv_o(t.graph, order, rep):
                    return t, order
    raise ValueError("sequence outside the image set")


def _realize_orders(
    t: PlanarQuotientTree,
    colors: Dict[str, int],
    seq: Tuple[int, ...],
    root_pos: int,
):
    """Linear extensions reading the given color word, root at root_pos."""
    g = t.graph
    preds: Dict[str, set] = {v: set() for v in g.vertices()}
    for a, b in g.edges:
        preds[a].add(b)
    placed: List[str] = []
    used = set()

    def rec(i: int):
        if i == len(seq):
            yield tuple(placed)
            return
        if i == root_pos:
            candidates = [ROOT]
        else:
            candidates = [
                v for v in g.labels if v not in used and colors[v] == seq[i]
            ]
        for v in candidates:
            if preds[v] <= used:
                placed.append(v)
                used.add(v)
                yield from rec(i + 1)
                placed.pop()
                used.remove(v)

    yield from rec(0)


# ---------------------------------------------------------------------------
# verification reports


def verify(l: Sequence[int]) -> dict:
    """Check the three desk-scale identities for one block tuple.

    (i) the colored sum equals the target element, (ii) the number of pairs
    equals the number of admissible sequences, (iii) the integral over the
    unit interval of the associated polynomial equals the sum over admissible
    tuples of the product of inverse factorials.  Everything is exact.
    """
    l = tuple(l)
    total = sum(l) + 1

    lhs = colored_sum(l)
    rhs = color_target(l)
    s_pass = lhs == rhs

    pairs = all_pairs(l)
    count_lhs = len(pairs)
    count_rhs = sum(
        factorial(total) // _prod_factorials(t) for t in admissible_tuples(l, total)
    )
    count_pass = count_lhs == count_rhs

    eps = epsilon_block(l)
    chains_total = LinComb()
    from .graphs import chains_of

    for sigma in pairings(eps):
        chains_total = chains_total + chains_of(glue(eps, sigma).graph)
    vol_lhs = poly_of(chains_total).integrate01()
    vol_rhs = sum(
        (Fraction(1, _prod_factorials(t)) for t in admissible_tuples(l, total)),
        Fraction(0),
    )
    vol_pass = vol_lhs == vol_rhs

    return {
        "l": list(l),
        "colored_sum_equals_target": {
            "pass": s_pass,
            "lhs_terms": len(lhs),
            "rhs_terms": len(rhs),
        },
        "pair_count_equals_sequence_count": {
            "pass": count_pass,
            "lhs": count_lhs,
            "rhs": count_rhs,
        },
        "volume_identity": {
            "pass": vol_pass,
            "lhs": vol_lhs,
            "rhs": vol_rhs,
        },
        "pass": s_pass and count_pass and vol_pass,
    }


def _prod_factorials(t: Tuple[int, ...]) -> int:
    out = 1
    for x in t:
        out *= factorial(x)
    return out
