"""Sign-reversing involution on configurations of a catalan polygon.

A configuration is a quotient tree together with a total derivative order.
The involution pairs configurations of opposite sign, leaving exactly one
fixed point per catalan sequence: the balanced gluing taken in preorder.

Construction: peel off the last removed vertex.  It is always a leaf whose
glued pair of polygon edges is adjacent with opposite orientations, so the
remainder is a configuration of the sequence with those two entries deleted.
Recurse; if the remainder is the smaller fixed point, the peeled position is
matched with its partner among the adjacent opposite-orientation slots
(toward-root slots interlace the away-from-root slots, the partner is the
same-rank slot of the other kind, the very last toward-root slot is matched
with nothing).  Undoing the peel on the partner side yields the image.

The component walk toward the sink and sink detection follow the same data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .derivorders import (
    above_root,
    all_deltas,
    apply_delta,
    delta_class_of,
    parents,
    validate_delta,
)
from .quotient import (
    PlanarQuotientTree,
    catalan_pairing,
    classify,
    glue,
    normalize_pairing,
    preorder,
)


@dataclass(frozen=True)
class Configuration:
    """Quotient tree plus a total derivative order over its vertices."""

    tree: PlanarQuotientTree
    delta: Tuple[str, ...]

    def __post_init__(self):
        g = self.tree.graph
        if set(self.delta) != set(g.labels) or not validate_delta(g, self.delta):
            raise ValueError(f"invalid total derivative order {self.delta}")

    def __repr__(self) -> str:
        return f"Config({self.tree!r}, delta={list(self.delta)})"


def make_config(eps, sigma, delta) -> Configuration:
    return Configuration(glue(eps, sigma), tuple(delta))


def config_sign(cfg: Configuration) -> int:
    """Product over steps of the contracted edge's orientation sign."""
    sign, _ = apply_delta(cfg.tree.graph, cfg.delta)
    return sign


def parent_pair(tree: PlanarQuotientTree, v: str) -> Tuple[int, int]:
    """Polygon pair of the tree edge between ``v`` and its root-side neighbor.

    This is the edge contracted when ``v`` is removed by any derivative order.
    """
    par = parents(tree.graph)[v]
    prov = tree.provenance
    if (v, par) in prov:
        return prov[(v, par)]
    return prov[(par, v)]


def step_pairs(cfg: Configuration) -> List[Tuple[int, int]]:
    """Provenance pair of the edge contracted at each step of the order."""
    return [parent_pair(cfg.tree, v) for v in cfg.delta]


def is_fixed_point(cfg: Configuration) -> bool:
    eps = cfg.tree.eps
    return (
        cfg.tree.sigma == catalan_pairing(eps)
        and cfg.delta == preorder(cfg.tree)[1:]
    )


# ---------------------------------------------------------------------------
# peeling helpers


def _vertex_maps(n: int, i: int):
    """Polygon-vertex renames when edges i, i+1 are deleted from an n-gon.

    Vertex i+1 disappears; vertices i and i+2 become the same vertex of the
    (n-2)-gon.  Returns (old->new, new->list of old).
    """
    fwd: Dict[int, int] = {}
    for t in range(1, n + 1):
        if t == i + 1:
            continue
        s = t if t <= i else t - 2
        s = (s - 1) % (n - 2) + 1
        fwd[t] = s
    inv: Dict[int, List[int]] = {}
    for t, s in fwd.items():
        inv.setdefault(s, []).append(t)
    return fwd, inv


def _edge_fwd(t: int, i: int) -> int:
    return t if t < i else t - 2


def _edge_back(s: int, i: int) -> int:
    return s if s < i else s + 2


def _rename_down(tree: PlanarQuotientTree, reduced: PlanarQuotientTree, i: int):
    """Vertex-name map from ``tree`` to ``reduced`` after deleting edges i, i+1."""
    n = len(tree.eps)
    fwd, _ = _vertex_maps(n, i)
    out: Dict[str, str] = {}
    for cls in tree.classes:
        members = [fwd[t] for t in cls if t != i + 1]
        if not members:
            continue  # the peeled leaf
        names = {reduced.name_of(s) for s in members}
        if len(names) != 1:
            raise AssertionError("peeling split an identification class")
        out[tree.names[cls]] = names.pop()
    return out


def _peel(cfg: Configuration):
    """Remove the last element of the order (an original leaf glued from an
    adjacent pair).  Returns (reduced configuration, peel position i)."""
    tree, delta = cfg.tree, cfg.delta
    last = delta[-1]
    i, j = parent_pair(tree, last)
    if j != i + 1:
        raise AssertionError("last removed edge must come from adjacent polygon edges")
    eps = tree.eps
    reduced_eps = eps[: i - 1] + eps[i + 1:]
    reduced_sigma = normalize_pairing(
        (_edge_fwd(a, i), _edge_fwd(b, i)) for a, b in tree.sigma if (a, b) != (i, j)
    )
    reduced_tree = glue(reduced_eps, reduced_sigma)
    down = _rename_down(tree, reduced_tree, i)
    reduced_delta = tuple(down[v] for v in delta[:-1])
    return Configuration(reduced_tree, reduced_delta), i


def _unpeel(eps, reduced: Configuration, i: int) -> Configuration:
    """Reattach the leaf glued from polygon edges i, i+1 as the last removal."""
    n = len(eps)
    sigma = normalize_pairing(
        [(_edge_back(a, i), _edge_back(b, i)) for a, b in reduced.tree.sigma]
        + [(i, i + 1)]
    )
    tree = glue(eps, sigma)
    _, inv = _vertex_maps(n, i)
    up: Dict[str, str] = {}
    for cls in reduced.tree.classes:
        olds = sorted(t for s in cls for t in inv[s])
        names = {tree.name_of(t) for t in olds}
        if len(names) != 1:
            raise AssertionError("unpeeling split an identification class")
        up[reduced.tree.names[cls]] = names.pop()
    leaf = tree.name_of(i + 1)
    delta = tuple(up[v] for v in reduced.delta) + (leaf,)
    return Configuration(tree, delta)


def _adjacent_slots(eps) -> Tuple[List[int], List[int]]:
    """Positions of adjacent (+1,-1) and (-1,+1) entry pairs; for a catalan
    sequence they interlace, the toward-root kind one longer."""
    toward = [t for t in range(1, len(eps)) if (eps[t - 1], eps[t]) == (1, -1)]
    away = [t for t in range(1, len(eps)) if (eps[t - 1], eps[t]) == (-1, 1)]
    if len(toward) != len(away) + 1:
        raise AssertionError("slot counts must differ by one on a catalan sequence")
    merged = sorted(toward + away)
    if merged[::2] != toward or merged[1::2] != away:
        raise AssertionError("slots must interlace")
    return toward, away


def apply_involution(cfg: Configuration) -> Optional[Configuration]:
    """Image of a configuration under the pairing, or None on the fixed point.

    The image has opposite sign, and the correspondence between the two
    derivative orders is positionwise.
    """
    if classify(cfg.tree.eps) != "catalan":
        raise ValueError("involution is defined for catalan sequences only")
    return _involve(cfg)


def _involve(cfg: Configuration) -> Optional[Configuration]:
    if is_fixed_point(cfg):
        return None
    eps = cfg.tree.eps
    reduced, i = _peel(cfg)
    sub = _involve(reduced)
    if sub is not None:
        return _unpeel(eps, sub, i)
    toward, away = _adjacent_slots(eps)
    if i in toward:
        rank = toward.index(i)
        if rank == len(toward) - 1:
            raise AssertionError("unpaired slot reached off the fixed point")
        partner = away[rank]
    else:
        partner = toward[away.index(i)]
    # the partner-side configuration whose peel is the smaller fixed point
    partner_eps = eps[: partner - 1] + eps[partner + 1:]
    partner_sigma = catalan_pairing(partner_eps)
    partner_tree = glue(partner_eps, partner_sigma)
    base = Configuration(partner_tree, preorder(partner_tree)[1:])
    return _unpeel(eps, base, partner)


# ---------------------------------------------------------------------------
# sinks and component walks


def _preorder_positions(tree: PlanarQuotientTree) -> Dict[str, int]:
    return {v: k for k, v in enumerate(preorder(tree))}


def sink_prefix(tree: PlanarQuotientTree) -> Tuple[str, ...]:
    """The above-root vertices in preorder."""
    pos = _preorder_positions(tree)
    return tuple(sorted(above_root(tree.graph), key=pos.get))


def is_sink(cfg: Configuration) -> bool:
    """A class is a sink when some member order starts with every above-root
    vertex, taken in preorder."""
    target = sink_prefix(cfg.tree)
    k = len(target)
    return any(
        tuple(d[:k]) == target for d in delta_class_of(cfg.tree.graph, cfg.delta)
    )


def class_configs(cfg: Configuration) -> List[Configuration]:
    """All configurations sharing the tree and the order's equivalence class."""
    return [
        Configuration(cfg.tree, d) for d in delta_class_of(cfg.tree.graph, cfg.delta)
    ]


def sink_representative(cfg: Configuration) -> Configuration:
    """The class member whose order starts with the sink prefix."""
    target = sink_prefix(cfg.tree)
    k = len(target)
    for d in delta_class_of(cfg.tree.graph, cfg.delta):
        if tuple(d[:k]) == target:
            return Configuration(cfg.tree, d)
    raise ValueError("configuration class is not a sink")


def descend_step(cfg: Configuration) -> Optional[Configuration]:
    """One step along the component graph: the image of a class member whose
    pairing strictly drops the above-root count, or None at a sink."""
    count = len(above_root(cfg.tree.graph))
    for rep in class_configs(cfg):
        img = apply_involution(rep)
        if img is not None and len(above_root(img.tree.graph)) < count:
            return img
    return None


def sink_of(cfg: Configuration) -> Tuple[Configuration, Dict[int, int]]:
    """Walk to the component's sink.

    The per-step order correspondence is positionwise, so the composed
    position map is the identity on 1..n; it is returned for completeness.
    """
    cur = cfg
    while not is_sink(cur):
        nxt = descend_step(cur)
        if nxt is None:
            raise AssertionError("non-sink class without outgoing pairing step")
        cur = nxt
    corr = {k: k for k in range(1, len(cfg.delta) + 1)}
    return cur, corr


def truncate(cfg: Configuration, k: int) -> Configuration:
    """Configuration induced on the root and the first ``k`` removed vertices.

    Their parent edges are the only glued pairs kept; every other polygon
    edge is deleted and each deleted run collapses to a point of the smaller
    polygon.
    """
    tree, delta = cfg.tree, cfg.delta
    if not 1 <= k <= len(delta):
        raise ValueError("prefix length out of range")
    kept_pairs = [parent_pair(tree, v) for v in delta[:k]]
    kept = sorted(i for p in kept_pairs for i in p)
    pos = {old: s for s, old in enumerate(kept, start=1)}
    eps2 = tuple(tree.eps[i - 1] for i in kept)
    sigma2 = normalize_pairing((pos[a], pos[b]) for a, b in kept_pairs)
    reduced = glue(eps2, sigma2)
    n = len(tree.eps)
    span = len(kept)

    def vmap(t: int) -> int:
        s = sum(1 for i in kept if i < t) + 1
        return (s - 1) % span + 1 if span else 1

    names: Dict[str, str] = {}
    for v in delta[:k]:
        cls = next(c for c in tree.classes if tree.names[c] == v)
        images = {reduced.name_of(vmap(t)) for t in cls}
        if len(images) != 1:
            raise AssertionError("truncation split an identification class")
        names[v] = images.pop()
    return Configuration(reduced, tuple(names[v] for v in delta[:k]))


def first_failure(cfg: Configuration) -> Optional[Tuple[int, int]]:
    """Smallest prefix length at which the order stops removing toward-root
    edges in preorder, as (position, case): case 1 breaks the preorder, case
    2 contracts an away-from-root edge.  None for the fixed-point pattern."""
    pos = _preorder_positions(cfg.tree)
    g = cfg.tree.graph
    from .derivorders import contract_step

    cur = g
    prev = None
    for t, x in enumerate(cfg.delta, start=1):
        if prev is not None and pos[x] < pos[prev]:
            return t, 1
        sign, cur = contract_step(cur, x)
        if sign == 1:
            return t, 2
        prev = x
    return None
