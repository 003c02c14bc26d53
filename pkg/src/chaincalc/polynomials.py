"""Exact rational univariate polynomials.

Bridges the chain ring back to ordinary one-variable calculus: a chain with
``n`` letters below the root and ``m`` above maps to ``x^n (1-x)^m / (n! m!)``
and chain combinations map linearly.  All arithmetic is over ``Fraction``, so
the volume identities checked downstream are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, List, Tuple

from .chains import RPoly


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(x) + c
        return acc

    def integrate01(self) -> Fraction:
        """Definite integral over the unit interval."""
        return sum((c / (i + 1) for i, c in enumerate(self.coeffs)), Fraction(0))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c} x")
            else:
                parts.append(f"{c} x^{i}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Polynomial()
ONE = Polynomial([1])
X = Polynomial([0, 1])


def basis_poly(n: int, m: int) -> Polynomial:
    """Exact expansion of ``x^n (1-x)^m / (n! m!)``."""
    if n < 0 or m < 0:
        raise ValueError("orders must be nonnegative")
    denom = factorial(n) * factorial(m)
    coeffs = [Fraction(0)] * (n + m + 1)
    for j in range(m + 1):
        coeffs[n + j] = Fraction((-1) ** j * comb(m, j), denom)
    return Polynomial(coeffs)


def poly_of(x: RPoly) -> Polynomial:
    """Forgetful map from chain combinations to polynomials: a chain with
    word lengths (n, m) goes to :func:`basis_poly`, extended linearly."""
    acc = ZERO
    for c, coef in x.items():
        acc = acc + coef * basis_poly(len(c.left), len(c.right))
    return acc


def poly_arith(op: str, *args):
    """Small dispatcher over the polynomial operations (used by the CLI)."""
    if op == "add":
        return args[0] + args[1]
    if op == "mul":
        return args[0] * args[1]
    if op == "derive":
        return args[0].derivative()
    if op == "eval":
        return args[0].evaluate(args[1])
    if op == "integrate01":
        return args[0].integrate01()
    raise ValueError(f"unknown op {op!r}")


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def polynomial_strings(p: Polynomial) -> List[str]:
    return [format_fraction(c) for c in p.coeffs]
