"""Orders of derivatives on rooted trees and their equivalence structure.

A derivative order removes non-root vertices one at a time, each vertex being
adjacent to the root at its removal step; contracting toward-root edges costs
a sign -1, away-from-root edges +1.  Vertices are grouped into layers by the
deepest direction change on their root path, and two total orders (of either
kind) are equivalent when they agree on all same-layer pairs.  Compatibility
couples linear extensions with derivative orders and induces a bijection
between the two kinds of equivalence classes.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .chains import ROOT
from .formal import LinComb
from .graphs import RootedDiGraph, graph, linear_extensions, reaches


def is_tree(g: RootedDiGraph) -> bool:
    n = len(g.labels) + 1
    if len(g.edges) != n - 1:
        return False
    adj: Dict[str, set] = {v: set() for v in g.vertices()}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {ROOT}
    stack = [ROOT]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _check_tree(g: RootedDiGraph):
    if not is_tree(g):
        raise ValueError("operation requires a rooted tree")


def parents(g: RootedDiGraph) -> Dict[str, str]:
    """Neighbor toward the root on each vertex's tree path (orientation-blind)."""
    return dict(_parents_cached(g))


@lru_cache(maxsize=None)
def _parents_cached(g: RootedDiGraph) -> Tuple[Tuple[str, str], ...]:
    _check_tree(g)
    adj: Dict[str, set] = {v: set() for v in g.vertices()}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    par: Dict[str, str] = {}
    stack = [ROOT]
    seen = {ROOT}
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                par[w] = v
                stack.append(w)
    return tuple(sorted(par.items()))


def root_path(g: RootedDiGraph, x: str) -> Tuple[str, ...]:
    """Path from the root to ``x`` along the undirected tree."""
    par = parents(g)
    if x == ROOT:
        return (ROOT,)
    if x not in par:
        raise ValueError(f"unknown vertex {x!r}")
    path = [x]
    while path[-1] != ROOT:
        path.append(par[path[-1]])
    return tuple(reversed(path))


def _edge_toward_root(g: RootedDiGraph, child: str, parent: str) -> bool:
    """True when the tree edge between child and parent points at the parent."""
    if (child, parent) in g.edges:
        return True
    if (parent, child) in g.edges:
        return False
    raise ValueError(f"no tree edge between {child!r} and {parent!r}")


def contract_step(g: RootedDiGraph, x: str) -> Tuple[int, RootedDiGraph]:
    """Contract the root edge at ``x``: sign -1 toward the root, +1 away."""
    if x not in g.labels:
        raise ValueError(f"unknown non-root vertex {x!r}")
    if (x, ROOT) in g.edges:
        sign, gone = -1, (x, ROOT)
    elif (ROOT, x) in g.edges:
        sign, gone = 1, (ROOT, x)
    else:
        raise ValueError(f"{x!r} is not adjacent to the root")
    new_edges = set()
    for a, b in g.edges:
        if (a, b) == gone:
            continue
        new_edges.add((ROOT if a == x else a, ROOT if b == x else b))
    return sign, graph([v for v in g.labels if v != x], new_edges)


def validate_delta(g: RootedDiGraph, delta: Sequence[str]) -> bool:
    """Each step's vertex must be root-adjacent in the contracted remainder."""
    _check_tree(g)
    delta = tuple(delta)
    if len(set(delta)) != len(delta) or ROOT in delta:
        raise ValueError("derivative order must list distinct non-root vertices")
    for x in delta:
        if x not in g.labels:
            raise ValueError(f"unknown vertex {x!r}")
    cur = g
    for x in delta:
        if not ((x, ROOT) in cur.edges or (ROOT, x) in cur.edges):
            return False
        _, cur = contract_step(cur, x)
    return True


def apply_delta(g: RootedDiGraph, delta: Sequence[str]) -> Tuple[int, RootedDiGraph]:
    """Run the derivative order; the sign is the product of the step signs."""
    _check_tree(g)
    sign = 1
    cur = g
    for x in delta:
        s, cur = contract_step(cur, x)
        sign *= s
    return sign, cur


def all_deltas(g: RootedDiGraph) -> List[Tuple[str, ...]]:
    """Every total derivative order, duplicate-free, lexicographic."""
    return list(_all_deltas_cached(g))


@lru_cache(maxsize=None)
def _all_deltas_cached(g: RootedDiGraph) -> Tuple[Tuple[str, ...], ...]:
    _check_tree(g)
    out: List[Tuple[str, ...]] = []
    prefix: List[str] = []

    def rec(cur: RootedDiGraph):
        if not cur.labels:
            out.append(tuple(prefix))
            return
        for x in cur.labels:
            if (x, ROOT) in cur.edges or (ROOT, x) in cur.edges:
                _, nxt = contract_step(cur, x)
                prefix.append(x)
                rec(nxt)
                prefix.pop()

    rec(g)
    return tuple(out)


@lru_cache(maxsize=None)
def above_root(g: RootedDiGraph) -> Tuple[str, ...]:
    """Vertices with a directed path down to the root, sorted."""
    return tuple(v for v in g.labels if reaches(g, ROOT, v))


def below_root(g: RootedDiGraph) -> Tuple[str, ...]:
    return tuple(v for v in g.labels if reaches(g, v, ROOT))


# ---------------------------------------------------------------------------
# layers


def last_bend(g: RootedDiGraph, x: str) -> Optional[str]:
    """Deepest interior vertex of the root path at which the edge directions
    around it disagree, or None when the path is monotone."""
    path = root_path(g, x)
    best = None
    for i in range(1, len(path) - 1):
        before = _edge_toward_root(g, path[i], path[i - 1])
        after = _edge_toward_root(g, path[i + 1], path[i])
        if before != after:
            best = path[i]
    return best


def layer_info(g: RootedDiGraph, x: str) -> Tuple[Optional[str], str]:
    """(last bend or None, side); side is 'above' when the vertex sits over
    the root and 'below' otherwise — meaningful only for bendless vertices."""
    bend = last_bend(g, x)
    side = "above" if reaches(g, ROOT, x) else "below"
    return bend, side


def same_layer(g: RootedDiGraph, x: str, y: str) -> bool:
    sig = _layer_signatures(g)
    bx, sx = sig[x]
    by, sy = sig[y]
    if bx is not None or by is not None:
        return bx == by
    return sx == sy


@lru_cache(maxsize=None)
def _layer_signatures(g: RootedDiGraph) -> Dict[str, Tuple[Optional[str], str]]:
    return {v: layer_info(g, v) for v in g.labels}


def _restriction(g: RootedDiGraph, order: Sequence[str]) -> list:
    """Relative order of the same-layer pairs, as a sorted list of pairs."""
    pos = {v: i for i, v in enumerate(order)}
    vs = [v for v in order if v != ROOT]
    out = []
    for i, x in enumerate(vs):
        for y in vs[i + 1:]:
            if same_layer(g, x, y):
                pair = (x, y) if pos[x] < pos[y] else (y, x)
                out.append(pair)
    return sorted(out)


def equiv_d(g: RootedDiGraph, d1: Sequence[str], d2: Sequence[str]) -> bool:
    """Two total derivative orders agree on all same-layer pairs."""
    for d in (d1, d2):
        if not validate_delta(g, d) or set(d) != set(g.labels):
            raise ValueError("arguments must be valid total derivative orders")
    return _restriction(g, d1) == _restriction(g, d2)


def equiv_o(g: RootedDiGraph, o1: Sequence[str], o2: Sequence[str]) -> bool:
    """Two linear extensions agree on all same-layer pairs."""
    exts = set(linear_extensions(g))
    if tuple(o1) not in exts or tuple(o2) not in exts:
        raise ValueError("arguments must be linear extensions of the tree")
    return _restriction(g, o1) == _restriction(g, o2)


def compatible(g: RootedDiGraph, order: Sequence[str], delta: Sequence[str]) -> bool:
    """At every step the removed vertex is the biggest comparable-below or the
    smallest comparable-above vertex of the contracted remainder."""
    order = tuple(order)
    if tuple(sorted(order)) != tuple(sorted(g.vertices())):
        raise ValueError("order must cover all vertices")
    if tuple(order) not in set(linear_extensions(g)):
        raise ValueError("order must be a linear extension")
    if not validate_delta(g, delta):
        raise ValueError("delta must be a valid derivative order")
    pos = {v: i for i, v in enumerate(order)}
    cur = g
    for x in delta:
        below = [v for v in cur.labels if reaches(cur, v, ROOT)]
        above = [v for v in cur.labels if reaches(cur, ROOT, v)]
        ok = False
        if below and x == max(below, key=pos.get):
            ok = True
        if above and x == min(above, key=pos.get):
            ok = True
        if not ok:
            return False
        _, cur = contract_step(cur, x)
    return True


def greedy_compatible_delta(g: RootedDiGraph, order: Sequence[str]) -> Tuple[str, ...]:
    """A canonical total derivative order compatible with a linear extension:
    prefer the smallest comparable-above vertex, else the biggest below."""
    pos = {v: i for i, v in enumerate(order)}
    cur = g
    out: List[str] = []
    while cur.labels:
        above = [v for v in cur.labels if reaches(cur, ROOT, v)]
        below = [v for v in cur.labels if reaches(cur, v, ROOT)]
        x = min(above, key=pos.get) if above else max(below, key=pos.get)
        out.append(x)
        _, cur = contract_step(cur, x)
    return tuple(out)


def delta_classes(g: RootedDiGraph) -> List[List[Tuple[str, ...]]]:
    """Partition of all total derivative orders into equivalence classes."""
    return [list(cls) for cls in _delta_partition(g)]


def order_classes(g: RootedDiGraph) -> List[List[Tuple[str, ...]]]:
    """Partition of all linear extensions into equivalence classes."""
    return [list(cls) for cls in _order_partition(g)]


@lru_cache(maxsize=None)
def _delta_partition(g: RootedDiGraph) -> tuple:
    buckets: Dict[tuple, List[Tuple[str, ...]]] = {}
    for d in _all_deltas_cached(g):
        buckets.setdefault(tuple(_restriction(g, d)), []).append(d)
    return tuple(tuple(buckets[k]) for k in sorted(buckets))


@lru_cache(maxsize=None)
def _order_partition(g: RootedDiGraph) -> tuple:
    buckets: Dict[tuple, List[Tuple[str, ...]]] = {}
    for o in linear_extensions(g):
        buckets.setdefault(tuple(_restriction(g, o)), []).append(o)
    return tuple(tuple(buckets[k]) for k in sorted(buckets))


def delta_class_of(g: RootedDiGraph, delta: Sequence[str]) -> List[Tuple[str, ...]]:
    delta = tuple(delta)
    for cls in _delta_partition(g):
        if delta in cls:
            return list(cls)
    raise ValueError(f"{delta} is not a total derivative order of the tree")


def class_tree(g: RootedDiGraph, order: Sequence[str]) -> RootedDiGraph:
    """Tree whose linear extensions are exactly the equivalence class of the
    given extension.

    Consecutive same-layer vertices are chained, and the first vertex of each
    layer hangs off its anchor: the common last bend, or the root for
    bendless layers (the root behaves as their bend).
    """
    order = tuple(order)
    pos = {v: i for i, v in enumerate(order)}
    vs = [v for v in order if v != ROOT]
    edges = set()

    def anchor_of(v: str) -> str:
        bend, _ = layer_info(g, v)
        return bend if bend is not None else ROOT

    for v in vs:
        for w in vs:
            if pos[v] >= pos[w]:
                continue
            blocked = any(
                same_layer(g, w, z) and pos[v] < pos[z] < pos[w]
                for z in vs
                if z not in (v, w)
            )
            if same_layer(g, v, w) and not blocked:
                edges.add((w, v))
        # anchor link: v hangs below or above its anchor depending on <
        a = anchor_of(v)
        blocked = any(
            same_layer(g, v, z)
            and min(pos[v], pos[a]) < pos[z] < max(pos[v], pos[a])
            for z in vs
            if z != v
        )
        if not blocked:
            if pos[a] < pos[v]:
                edges.add((v, a))
            else:
                edges.add((a, v))
    return graph(vs, edges)


def class_chain_sum(g: RootedDiGraph, orders: Sequence[Sequence[str]]) -> LinComb:
    """Chain sum of an order class (one chain per member extension)."""
    from .chains import Chain

    acc = []
    for order in orders:
        i = tuple(order).index(ROOT)
        acc.append((Chain(tuple(order[:i]), tuple(order[i + 1:])), 1))
    return LinComb(acc)
