"""Words under the shuffle product and root-split chains.

A *word* is a finite tuple of labels (repeats allowed; the reserved root
label never occurs in a word).  A *chain* is a pair of words ``left`` and
``right`` standing for the totally ordered set

    left[0] < ... < left[-1] < root < right[0] < ... < right[-1].

Scalars are integer combinations of words, ring elements are integer
combinations of chains.  The calculus (derivative, value at the ends,
integrals, Taylor expansion) acts on the chain ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from .formal import LinComb

ROOT = "r"

Word = Tuple[object, ...]


def word(letters: Iterable) -> Word:
    w = tuple(letters)
    if ROOT in w:
        raise ValueError(f"the reserved root label {ROOT!r} cannot occur in a word")
    return w


@dataclass(frozen=True)
class Chain:
    """A root-split chain: two words around the implicit root marker."""

    left: Word
    right: Word

    def __post_init__(self):
        if ROOT in self.left or ROOT in self.right:
            raise ValueError(f"the reserved root label {ROOT!r} cannot occur in a chain")

    def labels(self) -> Tuple[object, ...]:
        return self.left + self.right

    def __repr__(self) -> str:
        fmt = lambda w: "(" + ",".join(str(x) for x in w) + ")" if w else "()"
        return f"{fmt(self.left)}⊗{fmt(self.right)}"


def chain(left: Iterable = (), right: Iterable = ()) -> Chain:
    return Chain(word(left), word(right))


#: The unit of the chain ring.
UNIT_CHAIN = Chain((), ())

# Scalar: LinComb over words.  RPoly: LinComb over chains.
Scalar = LinComb
RPoly = LinComb


def unit_scalar() -> Scalar:
    return LinComb.term(())


def unit_rpoly() -> RPoly:
    return LinComb.term(UNIT_CHAIN)


# ---------------------------------------------------------------------------
# shuffle product on words / scalars


def shuffle(a: Word, b: Word) -> Scalar:
    """Sum over all interleavings of ``a`` and ``b``.

    Interleavings are counted per choice of positions, so repeated letters
    produce multiplicities: shuffle((c,), (c,)) == 2*(c, c).
    """
    a, b = tuple(a), tuple(b)
    n, m = len(a), len(b)
    acc: dict = {}
    for positions in itertools.combinations(range(n + m), n):
        out = [None] * (n + m)
        for pos, letter in zip(positions, a):
            out[pos] = letter
        it = iter(b)
        for i in range(n + m):
            if out[i] is None:
                out[i] = next(it)
        key = tuple(out)
        acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    """Bilinear extension of the shuffle product to scalars."""
    acc = LinComb()
    for wx, cx in x.items():
        for wy, cy in y.items():
            acc = acc + (cx * cy) * shuffle(wx, wy)
    return acc


# ---------------------------------------------------------------------------
# chain ring


def mul(x: RPoly, y: RPoly) -> RPoly:
    """Product of chain combinations: left parts and right parts shuffle
    independently, the two root markers are identified."""
    acc: dict = {}
    for cx, kx in _chain_items(x):
        for cy, ky in _chain_items(y):
            lefts = shuffle(cx.left, cy.left)
            rights = shuffle(cx.right, cy.right)
            k = kx * ky
            for wl, cl in lefts.items():
                for wr, cr in rights.items():
                    term = Chain(wl, wr)
                    coef = k * cl * cr
                    c = acc.get(term, 0) + coef
                    if c:
                        acc[term] = c
                    elif term in acc:
                        del acc[term]
    return LinComb(acc)


def _chain_items(x: RPoly) -> List[Tuple[Chain, int]]:
    return [(t, c) for t, c in x.items()]


def mul_all(factors: Iterable[RPoly]) -> RPoly:
    acc = unit_rpoly()
    for f in factors:
        acc = mul(acc, f)
    return acc


def embed(x) -> RPoly:
    """Embed a scalar as a constant chain element.

    A word ``(a_1,...,a_n)`` maps to the sum over all split points ``k`` of
    ``(a_1..a_k) ⊗ (a_{k+1}..a_n)``; every label derivative kills the image.
    Accepts a word or a Scalar.
    """
    if not isinstance(x, LinComb):
        w = word(x)
        return LinComb(((Chain(w[:k], w[k:]), 1) for k in range(len(w) + 1)))
    return x.map_terms(lambda w: embed(w))


def derive(x: RPoly, a) -> RPoly:
    """Label derivative: drop a trailing ``a`` on the left of the root
    (sign +1) and a leading ``a`` on the right of the root (sign -1)."""

    def per_chain(c: Chain) -> RPoly:
        terms = []
        if c.left and c.left[-1] == a:
            terms.append((Chain(c.left[:-1], c.right), 1))
        if c.right and c.right[0] == a:
            terms.append((Chain(c.left, c.right[1:]), -1))
        return LinComb(terms)

    return x.map_terms(per_chain)


def value(x: RPoly, end: int) -> Scalar:
    """Value of a chain combination at an end of the unit interval.

    At 1 a chain contributes its left word when the right word is empty; at 0
    it contributes its right word when the left word is empty.  The result is
    a scalar; compose with :func:`embed` for a constant chain element.
    """
    if end not in (0, 1):
        raise ValueError("end must be 0 or 1")

    def per_chain(c: Chain) -> Scalar:
        if end == 1:
            return LinComb.term(c.left) if not c.right else LinComb()
        return LinComb.term(c.right) if not c.left else LinComb()

    return x.map_terms(per_chain)


def integrate(x: RPoly, a, end: str) -> RPoly:
    """Integral of a chain combination in a fresh label ``a``.

    ``end="from0"``: the new label lands right of the left word, the right
    word splits on both sides of it, sign +1.  ``end="to1"``: the new label
    lands left of the right word, the left word splits, overall sign -1.
    """
    if end not in ("from0", "to1"):
        raise ValueError("end must be 'from0' or 'to1'")

    def per_chain(c: Chain) -> RPoly:
        if a in c.left or a in c.right:
            raise ValueError(f"integration label {a!r} already occurs in {c!r}")
        terms = []
        if end == "from0":
            b = c.right
            for k in range(len(b) + 1):
                terms.append((Chain(c.left + (a,) + b[:k], b[k:]), 1))
        else:
            aa = c.left
            for k in range(len(aa) + 1):
                terms.append((Chain(aa[:k], aa[k:] + (a,) + c.right), -1))
        return LinComb(terms)

    return x.map_terms(per_chain)


def labels_of(x: RPoly) -> list:
    """Sorted labels occurring in a chain combination."""
    seen = set()
    for c, _ in x.items():
        seen.update(c.left)
        seen.update(c.right)
    return sorted(seen, key=repr)


def ftc_rhs(f: RPoly) -> RPoly:
    """Right-hand side of the fundamental theorem:
    ``embed(f(0)) + sum_a integral_from_0(d/da f, a)``.

    Equals ``f`` for every chain combination; the sum runs over the labels
    actually present in ``f``.
    """
    acc = embed(value(f, 0))
    for a in labels_of(f):
        acc = acc + integrate(derive(f, a), a, "from0")
    return acc


def taylor(f: RPoly, end: int) -> List[Tuple[Word, Scalar]]:
    """Taylor data of ``f`` at an end of the interval.

    Returns pairs ``(word, coefficient)`` where ``coefficient`` is the value
    at ``end`` of the iterated derivative indexed by ``word`` (leftmost letter
    applied last).  Only nonzero coefficients are emitted, in canonical word
    order.  Reconstruction is :func:`taylor_reconstruct`.
    """
    out: dict = {}

    def walk(w: Word, g: RPoly):
        if not g:
            return
        v = value(g, end)
        if v:
            out[w] = v
        for a in labels_of(g):
            walk((a,) + w, derive(g, a))

    walk((), f)
    return sorted(out.items(), key=lambda kv: (len(kv[0]), repr(kv[0])))


def taylor_reconstruct(entries: List[Tuple[Word, Scalar]], end: int) -> RPoly:
    """Rebuild a chain combination from its Taylor data at ``end``."""
    acc = LinComb()
    for w, coef in entries:
        if end == 0:
            factor = LinComb.term(Chain(w, ()))
            acc = acc + mul(embed(coef), factor)
        else:
            sign = -1 if len(w) % 2 else 1
            factor = LinComb.term(Chain((), tuple(reversed(w))))
            acc = acc + sign * mul(embed(coef), factor)
    return acc
