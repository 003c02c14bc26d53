"""JSON encodings for the package's value types.

All encoders produce deterministically ordered structures so identical
inputs serialize to identical bytes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .chains import Chain, RPoly, Scalar
from .formal import LinComb
from .graphs import ROOT, RootedDiGraph, graph
from .polynomials import Polynomial, format_fraction
from .quotient import PlanarQuotientTree


def chain_to_json(c: Chain) -> dict:
    return {"left": list(c.left), "right": list(c.right)}


def chain_from_json(obj: dict) -> Chain:
    return Chain(tuple(obj["left"]), tuple(obj["right"]))


def rpoly_to_json(x: RPoly) -> List[dict]:
    return [{"coef": coef, "chain": chain_to_json(c)} for c, coef in x.items()]


def rpoly_from_json(obj) -> RPoly:
    return LinComb((chain_from_json(t["chain"]), int(t["coef"])) for t in obj)


def scalar_to_json(x: Scalar) -> List[dict]:
    return [{"coef": coef, "word": list(w)} for w, coef in x.items()]


def graph_to_json(g: RootedDiGraph) -> dict:
    return {
        "root": ROOT,
        "vertices": list(g.labels),
        "edges": sorted([a, b] for a, b in g.edges),
    }


def graph_from_json(obj: dict) -> RootedDiGraph:
    return graph(obj["vertices"], [tuple(e) for e in obj["edges"]])


def tree_to_json(t: PlanarQuotientTree) -> dict:
    out = graph_to_json(t.graph)
    out["epsilon"] = list(t.eps)
    out["sigma"] = [list(p) for p in t.sigma]
    out["embedding"] = {
        v: [list(e) for e in t.embedding[v]] for v in sorted(t.embedding)
    }
    out["provenance"] = sorted(
        ({"edge": list(e), "pair": list(p)} for e, p in t.provenance.items()),
        key=lambda d: d["pair"],
    )
    return out


def pairing_to_json(sigma) -> List[List[int]]:
    return [list(p) for p in sigma]


def poly_to_json(p: Polynomial) -> dict:
    return {
        "coefficients": [format_fraction(c) for c in p.coeffs],
        "text": repr(p),
    }


def fraction_to_json(q: Fraction) -> str:
    return format_fraction(q)


def jsonify(value):
    """Recursively convert Fractions inside report structures."""
    if isinstance(value, Fraction):
        return fraction_to_json(value)
    if isinstance(value, dict):
        return {k: jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonify(v) for v in value]
    return value
