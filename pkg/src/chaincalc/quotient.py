"""Polygon orientation sequences, non-crossing gluings and quotient trees.

A sequence of ±1 entries encodes edge orientations around a polygon whose
edge ``i`` joins vertices ``i`` and ``i+1`` (1-based, cyclic); entry ``+1``
means the arrow points from vertex ``i+1`` back to vertex ``i``.  Gluing the
polygon edges along a compatible non-crossing pairing produces a rooted plane
tree whose root is the class of vertex 1.  Each tree edge remembers the pair
of polygon edges it was glued from, and the plane structure is inherited from
the polygon walk, which visits the quotient vertices in preorder.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .chains import ROOT
from .graphs import RootedDiGraph, graph

Epsilon = Tuple[int, ...]
Pair = Tuple[int, int]
Pairing = Tuple[Pair, ...]


def epsilon(entries: Iterable[int]) -> Epsilon:
    eps = tuple(int(x) for x in entries)
    if len(eps) % 2:
        raise ValueError("orientation sequence must have even length")
    if any(x not in (1, -1) for x in eps):
        raise ValueError("entries must be +1 or -1")
    return eps


def classify(eps: Epsilon) -> str:
    """'catalan' (prefix sums >= 0, total 0), 'anticatalan', or 'neither'."""
    eps = epsilon(eps)
    if sum(eps) != 0:
        return "neither"
    run = 0
    nonneg = nonpos = True
    for x in eps:
        run += x
        nonneg &= run >= 0
        nonpos &= run <= 0
    if nonneg:
        return "catalan"
    if nonpos:
        return "anticatalan"
    return "neither"


def normalize_pairing(pairs: Iterable[Iterable[int]]) -> Pairing:
    out = tuple(sorted(tuple(sorted(p)) for p in pairs))
    seen = [i for p in out for i in p]
    if len(set(seen)) != len(seen):
        raise ValueError("pairing has repeated indices")
    return out


def is_noncrossing(pairs: Pairing) -> bool:
    for p, r_ in pairs:
        for q, s in pairs:
            if p < q < r_ < s:
                return False
    return True


def compatible_pairing(eps: Epsilon, pairs: Pairing) -> bool:
    return all(eps[i - 1] + eps[j - 1] == 0 for i, j in pairs)


def pairings(eps: Epsilon) -> List[Pairing]:
    """All non-crossing perfect matchings of ``1..len(eps)`` whose paired
    entries have opposite orientation, in canonical order."""
    eps = epsilon(eps)
    n = len(eps)

    def rec(indices: Tuple[int, ...]) -> List[List[Pair]]:
        if not indices:
            return [[]]
        first = indices[0]
        out = []
        for k in range(1, len(indices), 2):
            j = indices[k]
            if eps[first - 1] + eps[j - 1] != 0:
                continue
            inner = indices[1:k]
            outer = indices[k + 1:]
            for pi in rec(inner):
                for po in rec(outer):
                    out.append([(first, j)] + pi + po)
        return out

    return sorted(normalize_pairing(p) for p in rec(tuple(range(1, n + 1))))


def catalan_pairing(eps: Epsilon) -> Pairing:
    """Balanced matching for a catalan (or anticatalan) sequence.

    For a catalan sequence the quotient has every edge directed toward the
    root; for an anticatalan one, away from it.
    """
    kind = classify(eps)
    if kind == "neither":
        raise ValueError("sequence is neither catalan nor anticatalan")
    open_sign = 1 if kind == "catalan" else -1
    stack: List[int] = []
    pairs = []
    for i, x in enumerate(eps, start=1):
        if x == open_sign:
            stack.append(i)
        else:
            pairs.append((stack.pop(), i))
    return normalize_pairing(pairs)


@dataclass(frozen=True)
class PlanarQuotientTree:
    """Quotient of a polygon by a compatible non-crossing pairing.

    Identity (equality, hashing) is by the polygon data; the tree view,
    vertex classes, provenance and plane structure are derived.
    """

    eps: Epsilon
    sigma: Pairing

    @cached_property
    def classes(self) -> Tuple[Tuple[int, ...], ...]:
        """Identification classes of polygon vertices, sorted by minimum."""
        n = len(self.eps)
        parent = list(range(n + 1))  # 1-based

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        def vtx(i: int) -> int:
            return (i - 1) % n + 1

        for i, j in self.sigma:
            union(vtx(i), vtx(j + 1))
            union(vtx(i + 1), vtx(j))
        groups: Dict[int, List[int]] = {}
        for v in range(1, n + 1):
            groups.setdefault(find(v), []).append(v)
        return tuple(tuple(sorted(g)) for g in sorted(groups.values()))

    @cached_property
    def class_of(self) -> Dict[int, Tuple[int, ...]]:
        return {v: cls for cls in self.classes for v in cls}

    @cached_property
    def names(self) -> Dict[Tuple[int, ...], str]:
        """Canonical vertex names: the root class (containing vertex 1) is
        the root label, every other class is named after its minimum."""
        return {cls: (ROOT if cls[0] == 1 else f"v{cls[0]}") for cls in self.classes}

    def name_of(self, polygon_vertex: int) -> str:
        return self.names[self.class_of[polygon_vertex]]

    @cached_property
    def provenance(self) -> Dict[Tuple[str, str], Pair]:
        """Tree edge -> the polygon edge pair it was glued from."""
        n = len(self.eps)
        out: Dict[Tuple[str, str], Pair] = {}
        for i, j in self.sigma:
            lo = self.name_of(i)
            hi = self.name_of((i % n) + 1)
            edge = (hi, lo) if self.eps[i - 1] == 1 else (lo, hi)
            out[edge] = (i, j)
        return out

    @cached_property
    def graph(self) -> RootedDiGraph:
        g = graph(
            [name for cls, name in self.names.items() if name != ROOT],
            self.provenance.keys(),
        )
        n_classes = len(self.classes)
        if len(g.edges) != n_classes - 1 or len(self.sigma) != n_classes - 1:
            raise ValueError("quotient is not a tree (pairing crosses)")
        return g

    @cached_property
    def embedding(self) -> Dict[str, Tuple[Tuple[str, str], ...]]:
        """Incident tree edges per vertex, in polygon-walk (plane) order."""
        n = len(self.eps)
        edge_by_pos: Dict[int, Tuple[str, str]] = {}
        for edge, (i, j) in self.provenance.items():
            edge_by_pos[i] = edge
            edge_by_pos[j] = edge
        out: Dict[str, Tuple[Tuple[str, str], ...]] = {}
        for cls in self.classes:
            seen: List[Tuple[str, str]] = []
            for v in cls:
                for pos in ((v - 2) % n + 1, v):  # edges around polygon vertex v
                    e = edge_by_pos[pos]
                    if e not in seen:
                        seen.append(e)
            out[self.names[cls]] = tuple(seen)
        return out

    def nonroot_vertices(self) -> Tuple[str, ...]:
        return self.graph.labels

    def __repr__(self) -> str:
        sig = ",".join(f"{{{i},{j}}}" for i, j in self.sigma)
        return f"QuotientTree(eps={list(self.eps)}, sigma=[{sig}])"


def glue(eps: Epsilon, pairs) -> PlanarQuotientTree:
    """Glue polygon edges along a pairing; reject non-tree quotients."""
    eps = epsilon(eps)
    sigma = normalize_pairing(pairs)
    if sorted(i for p in sigma for i in p) != list(range(1, len(eps) + 1)):
        raise ValueError("pairing must cover every polygon edge exactly once")
    if not compatible_pairing(eps, sigma):
        raise ValueError("pairing not orientation-compatible")
    if not is_noncrossing(sigma):
        raise ValueError("pairing crosses; quotient is not a tree")
    t = PlanarQuotientTree(eps, sigma)
    t.graph  # force the tree check
    return t


def preorder(t: PlanarQuotientTree) -> Tuple[str, ...]:
    """Vertices in first-visit order of the contour walk from the root.

    The contour walk of the quotient tree is the polygon boundary walk, so
    first visits happen in order of each class's minimal polygon vertex.
    """
    return tuple(t.names[cls] for cls in t.classes)


def epsilon_block(l: Tuple[int, ...]) -> Epsilon:
    """Alternating block sequence for a weakly increasing tuple ``l``.

    With ``m = len(l)`` the first half runs through block lengths
    ``l_m, ..., l_1`` with alternating signs starting at +1, the second half
    mirrors it; the result is always catalan.
    """
    l = tuple(int(x) for x in l)
    if not l or any(x < 1 for x in l):
        raise ValueError("block lengths must be positive")
    if any(a > b for a, b in zip(l, l[1:])):
        raise ValueError("block lengths must be weakly increasing")
    m = len(l)
    first = []
    for idx, j in enumerate(range(m, 0, -1)):  # l_m .. l_1
        sign = (-1) ** idx
        first.extend([sign] * l[j - 1])
    second = []
    for idx, j in enumerate(range(1, m + 1)):  # l_1 .. l_m
        sign = (-1) ** (m - j + 1)
        second.extend([sign] * l[j - 1])
    eps = epsilon(first + second)
    assert classify(eps) == "catalan"
    return eps


def negate(eps: Epsilon) -> Epsilon:
    return tuple(-x for x in eps)


def quotient_trees(eps: Epsilon) -> List[PlanarQuotientTree]:
    """One quotient tree per compatible non-crossing pairing."""
    return [glue(eps, sigma) for sigma in pairings(eps)]
