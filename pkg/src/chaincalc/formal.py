"""Formal integer linear combinations over an arbitrary hashable basis.

Every algebra in this package (words under shuffle, root-split chains,
combinations of rooted graphs) is a :class:`LinComb` over a different basis.
Coefficients are plain Python ints, so they are arbitrary precision.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping, Tuple


def _term_key(term) -> str:
    # Canonical total order on basis elements: lexicographic on repr.
    # Basis types used here (tuples, frozen dataclasses) have stable reprs.
    return repr(term)


class LinComb:
    """Immutable formal sum ``sum(coef * term)`` with nonzero int coefficients.

    Terms with coefficient zero are never stored, so equality and hashing are
    well defined on the normalized map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable[Tuple[object, int]] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for term, coef in items:
            if not isinstance(coef, int):
                raise TypeError(f"coefficient must be int, got {type(coef).__name__}")
            c = acc.get(term, 0) + coef
            if c:
                acc[term] = c
            elif term in acc:
                del acc[term]
        object.__setattr__(self, "_terms", acc)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LinComb is immutable")

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def term(cls, basis_element, coef: int = 1) -> "LinComb":
        return cls(((basis_element, coef),))

    # -- mapping-ish access ------------------------------------------------

    def coeff(self, basis_element) -> int:
        return self._terms.get(basis_element, 0)

    def items(self) -> list:
        """Terms as ``(basis_element, coef)``, in canonical basis order."""
        return sorted(self._terms.items(), key=lambda kv: _term_key(kv[0]))

    def support(self) -> list:
        return [t for t, _ in self.items()]

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, basis_element) -> bool:
        return basis_element in self._terms

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for term, coef in other._terms.items():
            c = acc.get(term, 0) + coef
            if c:
                acc[term] = c
            elif term in acc:
                del acc[term]
        return LinComb(acc)

    def __neg__(self) -> "LinComb":
        return LinComb({t: -c for t, c in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar: int) -> "LinComb":
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return LinComb()
        return LinComb({t: scalar * c for t, c in self._terms.items()})

    def __mul__(self, scalar: int) -> "LinComb":
        return self.__rmul__(scalar)

    def map_terms(self, fn: Callable[[object], "LinComb"]) -> "LinComb":
        """Linear extension of a basis-level map ``term -> LinComb``."""
        acc: dict = {}
        for term, coef in self._terms.items():
            for t2, c2 in fn(term)._terms.items():
                c = acc.get(t2, 0) + coef * c2
                if c:
                    acc[t2] = c
                elif t2 in acc:
                    del acc[t2]
        return LinComb(acc)

    def map_basis(self, fn: Callable[[object], object]) -> "LinComb":
        """Relabel basis elements through ``fn`` (must stay injective)."""
        return self.map_terms(lambda t: LinComb.term(fn(t)))

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for term, coef in self.items():
            if coef == 1:
                parts.append(f"{term!r}")
            elif coef == -1:
                parts.append(f"-{term!r}")
            else:
                parts.append(f"{coef}*{term!r}")
        return " + ".join(parts).replace("+ -", "- ")


def lincomb_sum(parts: Iterable[Tuple[int, LinComb]]) -> LinComb:
    """Integer-weighted sum of combinations, zero coefficients pruned."""
    acc = LinComb()
    for weight, comb in parts:
        acc = acc + weight * comb
    return acc
