"""Shared builders for the test suite."""

from __future__ import annotations

import itertools
import random

from chaincalc.chains import Chain, ROOT
from chaincalc.formal import LinComb
from chaincalc.graphs import RootedDiGraph, graph

LETTERS = "abcdefghij"


def chain_graph(below, above) -> RootedDiGraph:
    """The totally ordered tree with the given labels below/above the root."""
    seq = list(below) + [ROOT] + list(above)
    edges = [(seq[i + 1], seq[i]) for i in range(len(seq) - 1)]
    return graph([x for x in seq if x != ROOT], edges)


def random_word(rng: random.Random, alphabet, max_len: int):
    n = rng.randint(0, max_len)
    return tuple(rng.choice(alphabet) for _ in range(n))


def random_distinct_word(rng: random.Random, alphabet, max_len: int):
    n = rng.randint(0, min(max_len, len(alphabet)))
    return tuple(rng.sample(alphabet, n))


def random_chain(rng: random.Random, alphabet, max_len: int) -> Chain:
    letters = random_distinct_word(rng, alphabet, max_len)
    k = rng.randint(0, len(letters))
    return Chain(letters[:k], letters[k:])


def random_rpoly(rng: random.Random, alphabet, max_len: int, terms: int) -> LinComb:
    acc = []
    for _ in range(rng.randint(1, terms)):
        acc.append((random_chain(rng, alphabet, max_len), rng.randint(-3, 3)))
    return LinComb(acc)


def random_tree(rng: random.Random, n_nonroot: int) -> RootedDiGraph:
    """Uniform-ish random oriented tree on the root plus n labeled vertices."""
    labels = list(LETTERS[:n_nonroot])
    vertices = [ROOT] + labels
    edges = []
    for i, v in enumerate(labels, start=1):
        parent = vertices[rng.randrange(0, i)]
        if rng.random() < 0.5:
            edges.append((v, parent))
        else:
            edges.append((parent, v))
    return graph(labels, edges)


def random_dag(rng: random.Random, n_nonroot: int, p_edge: float = 0.4) -> RootedDiGraph:
    """Random labeled DAG: orient each chosen pair along a random topological
    order, so the result is acyclic by construction."""
    labels = list(LETTERS[:n_nonroot])
    vertices = [ROOT] + labels
    rng.shuffle(vertices)
    edges = []
    for i, j in itertools.combinations(range(len(vertices)), 2):
        if rng.random() < p_edge:
            edges.append((vertices[i], vertices[j]))
    return graph(labels, edges)


def all_small_dags(n_nonroot: int):
    """Every labeled acyclic orientation pattern on root plus n vertices."""
    labels = list(LETTERS[:n_nonroot])
    vertices = [ROOT] + labels
    pairs = list(itertools.combinations(vertices, 2))
    for choice in itertools.product((None, 0, 1), repeat=len(pairs)):
        edges = []
        for (u, v), c in zip(pairs, choice):
            if c == 0:
                edges.append((u, v))
            elif c == 1:
                edges.append((v, u))
        try:
            yield graph(labels, edges)
        except ValueError:
            continue
