"""Labeled rooted acyclic digraphs and their calculus.

An edge ``(a, b)`` points from ``a`` to ``b``; the derived strict order puts
``a`` above ``b`` whenever a directed path from ``a`` to ``b`` exists.  The
root carries the reserved label ``"r"`` and all other labels are distinct.

The calculus mirrors the chain ring: products identify roots, the derivative
in a label contracts the root edge at that label with an orientation sign,
integrals demote the root to an ordinary vertex, and :func:`chains_of` sends
a graph to the sum of its linear extensions read as root-split chains.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Set, Tuple

from .chains import ROOT, Chain, RPoly
from .formal import LinComb

Edge = Tuple[str, str]


@dataclass(frozen=True)
class RootedDiGraph:
    """Rooted acyclic digraph; ``labels`` excludes the implicit root."""

    labels: Tuple[str, ...]
    edges: frozenset

    def __post_init__(self):
        if ROOT in self.labels:
            raise ValueError("root label is reserved")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate non-root labels")
        vs = set(self.labels) | {ROOT}
        for a, b in self.edges:
            if a not in vs or b not in vs:
                raise ValueError(f"edge ({a},{b}) mentions unknown vertex")
            if a == b:
                raise ValueError("self-loops not allowed")
        if _has_cycle(vs, self.edges):
            raise ValueError("directed cycle")

    def vertices(self) -> Tuple[str, ...]:
        return (ROOT,) + self.labels

    def __repr__(self) -> str:
        es = ",".join(f"{a}->{b}" for a, b in sorted(self.edges))
        return f"Graph[{','.join(self.labels)}|{es}]"


def graph(labels: Iterable[str], edges: Iterable[Edge]) -> RootedDiGraph:
    return RootedDiGraph(tuple(sorted(labels)), frozenset(tuple(e) for e in edges))


ROOT_ONLY = None  # set below once graph() exists


def _has_cycle(vertices: Set[str], edges) -> bool:
    succ: Dict[str, list] = {v: [] for v in vertices}
    for a, b in edges:
        succ[a].append(b)
    state: Dict[str, int] = {}

    def visit(v: str) -> bool:
        state[v] = 1
        for w in succ[v]:
            s = state.get(w, 0)
            if s == 1 or (s == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state.get(v, 0) == 0 and visit(v) for v in vertices)


def reaches(g: RootedDiGraph, a: str, b: str) -> bool:
    """True iff ``a`` sits strictly below ``b``: a directed path b -> a exists."""
    reach = _reach_from(g)
    if a not in reach or b not in reach:
        raise ValueError("unknown label")
    return a in reach[b] and a != b


@lru_cache(maxsize=None)
def _reach_from(g: RootedDiGraph) -> Dict[str, frozenset]:
    succ: Dict[str, list] = {v: [] for v in g.vertices()}
    for u, w in g.edges:
        succ[u].append(w)
    out: Dict[str, frozenset] = {}

    def visit(v: str) -> frozenset:
        if v not in out:
            out[v] = frozenset()  # cycle guard; graphs here are acyclic
            acc = set()
            for w in succ[v]:
                acc.add(w)
                acc |= visit(w)
            out[v] = frozenset(acc)
        return out[v]

    for v in succ:
        visit(v)
    return out


def linear_extensions(g: RootedDiGraph) -> List[Tuple[str, ...]]:
    """All total orders (ascending tuples) compatible with the graph order.

    An edge ``(a, b)`` forces ``b`` before ``a``.  The list is exhaustive and
    duplicate-free, in lexicographic order of the produced tuples.
    """
    return list(_extensions_cached(g))


@lru_cache(maxsize=None)
def _extensions_cached(g: RootedDiGraph) -> Tuple[Tuple[str, ...], ...]:
    vs = sorted(g.vertices())
    preds: Dict[str, Set[str]] = {v: set() for v in vs}
    for a, b in g.edges:
        preds[a].add(b)  # b must be placed before a
    out: List[Tuple[str, ...]] = []
    placed: List[str] = []
    remaining = set(vs)

    def backtrack():
        if not remaining:
            out.append(tuple(placed))
            return
        for v in sorted(remaining):
            if preds[v] <= set(placed):
                placed.append(v)
                remaining.remove(v)
                backtrack()
                placed.pop()
                remaining.add(v)

    backtrack()
    return tuple(out)


def product(g1: RootedDiGraph, g2: RootedDiGraph) -> RootedDiGraph:
    """Disjoint union with the two roots identified."""
    common = set(g1.labels) & set(g2.labels)
    if common:
        raise ValueError(f"overlapping non-root labels: {sorted(common)}")
    return graph(g1.labels + g2.labels, g1.edges | g2.edges)


def _contract_root_edge(g: RootedDiGraph, a: str, edge: Edge):
    """Contract the given root edge, ``a`` merging into the root.

    Returns None when the merge closes a directed cycle; such contractions
    count as zero (their linear extension sum is empty).
    """
    new_edges = set()
    for u, w in g.edges:
        if (u, w) == edge:
            continue
        u2 = ROOT if u == a else u
        w2 = ROOT if w == a else w
        new_edges.add((u2, w2))
    try:
        return graph(tuple(x for x in g.labels if x != a), new_edges)
    except ValueError:
        return None


def derive_graph(g: RootedDiGraph, a: str) -> LinComb:
    """Derivative in label ``a``: contract the away-from-root edge with sign
    +1 and the toward-root edge with sign -1; absent edges contribute
    nothing, and contractions closing a cycle count as zero.
    """
    if a not in g.labels:
        raise ValueError(f"unknown non-root label {a!r}")
    terms = []
    if (ROOT, a) in g.edges:
        contracted = _contract_root_edge(g, a, (ROOT, a))
        if contracted is not None:
            terms.append((contracted, 1))
    if (a, ROOT) in g.edges:
        contracted = _contract_root_edge(g, a, (a, ROOT))
        if contracted is not None:
            terms.append((contracted, -1))
    return LinComb(terms)


def derive_graph_total(g: RootedDiGraph) -> LinComb:
    """Sum of the label derivatives over all root neighbors."""
    acc = LinComb()
    for a in g.labels:
        if (ROOT, a) in g.edges or (a, ROOT) in g.edges:
            acc = acc + derive_graph(g, a)
    return acc


def integrate_graph(g: RootedDiGraph, a: str, end: str) -> LinComb:
    """Antiderivative: rename the old root to the fresh label ``a``, attach a
    new root.  ``to1`` points the new edge at the root and carries sign -1;
    ``from0`` points it away and carries sign +1.
    """
    if end not in ("from0", "to1"):
        raise ValueError("end must be 'from0' or 'to1'")
    if a in g.labels or a == ROOT:
        raise ValueError(f"label {a!r} already used")
    renamed = set()
    for u, w in g.edges:
        renamed.add((a if u == ROOT else u, a if w == ROOT else w))
    if end == "to1":
        renamed.add((a, ROOT))
        return LinComb.term(graph(g.labels + (a,), renamed), -1)
    renamed.add((ROOT, a))
    return LinComb.term(graph(g.labels + (a,), renamed), 1)


def chains_of(g: RootedDiGraph) -> RPoly:
    """Sum over linear extensions of the root-split chain, coefficient 1."""
    acc = []
    for order in linear_extensions(g):
        i = order.index(ROOT)
        acc.append((Chain(order[:i], order[i + 1:]), 1))
    return LinComb(acc)


def chains_comb(comb: LinComb) -> RPoly:
    """Linear extension of :func:`chains_of` to graph combinations."""
    return comb.map_terms(chains_of)


ROOT_ONLY = graph((), ())
