"""Command-line interface.

Every subcommand is a thin adapter: parse flags, call one library operation,
print JSON (or a plain-text rendering) to stdout.  Exit codes: 0 on success
or a passing verification, 1 on a failing verification, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import jsonio
from .chains import derive, integrate, taylor, value
from .coloring import (
    all_pairs,
    bijection_forward,
    bijection_inverse,
    colored_sum,
    coloring_for_order,
    vertex_colors,
    verify,
)
from .graphs import linear_extensions
from .involution import Configuration, apply_involution, sink_of
from .polynomials import poly_of
from .quotient import glue, pairings


class UsageError(Exception):
    pass


def _parse_epsilon(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--epsilon: expected CSV of ±1, got {text!r}")


def _parse_sigma(text: str):
    pairs = []
    try:
        for part in text.split(","):
            a, b = part.split("-")
            pairs.append((int(a), int(b)))
    except ValueError:
        raise UsageError(f"--sigma: expected pairs like 1-4,2-3, got {text!r}")
    return pairs


def _parse_l(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--l: expected CSV of integers, got {text!r}")


def _load_input(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"--input: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"--input: invalid JSON ({exc})")


def _emit(payload, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        _emit_text(payload)


def _emit_text(payload, indent: int = 0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for k in sorted(payload):
            v = payload[k]
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _emit_text(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _emit_text(v, indent)
            else:
                print(f"{pad}{v}")
    else:
        print(f"{pad}{payload}")


def _require(args, names: List[str]):
    for n in names:
        if getattr(args, n.replace("-", "_"), None) is None:
            raise UsageError(f"--{n} is required for this command")


def _tree_from_args(args):
    _require(args, ["epsilon", "sigma"])
    return glue(_parse_epsilon(args.epsilon), _parse_sigma(args.sigma))


def _end_chain(end: str) -> str:
    if end == "0":
        return "from0"
    if end == "1":
        return "to1"
    raise UsageError("--end must be 0 or 1")


def run(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="chaincalc",
        description="exact calculus on root-split chains and quotient trees",
    )
    parser.add_argument("command", choices=[
        "pairings", "tree", "extensions", "derive", "integrate", "taylor",
        "poly", "involution", "color", "bijection", "verify",
    ])
    parser.add_argument("--epsilon", help="CSV of ±1 polygon orientations")
    parser.add_argument("--sigma", help="pairing as 1-4,2-3")
    parser.add_argument("--delta", help="CSV of vertex labels")
    parser.add_argument("--l", help="CSV of weakly increasing block lengths")
    parser.add_argument("--label", help="label for derivatives/integrals")
    parser.add_argument("--end", help="0 or 1")
    parser.add_argument("--invert", help="CSV color sequence for bijection inversion")
    parser.add_argument("--input", help="JSON input file (chain combination or graph)")
    parser.add_argument("--format", default="json", choices=["json", "text"])

    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return 2

    try:
        payload, code = _dispatch(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    _emit(jsonio.jsonify(payload), args.format)
    return code


def _dispatch(args):
    cmd = args.command

    if cmd == "pairings":
        _require(args, ["epsilon"])
        eps = _parse_epsilon(args.epsilon)
        return {"epsilon": list(eps),
                "pairings": [jsonio.pairing_to_json(s) for s in pairings(eps)]}, 0

    if cmd == "tree":
        t = _tree_from_args(args)
        return jsonio.tree_to_json(t), 0

    if cmd == "extensions":
        if args.input:
            g = jsonio.graph_from_json(_load_input(args.input))
        else:
            g = _tree_from_args(args).graph
        return {"extensions": [list(o) for o in linear_extensions(g)]}, 0

    if cmd == "derive":
        _require(args, ["input", "label"])
        x = jsonio.rpoly_from_json(_load_input(args.input))
        return jsonio.rpoly_to_json(derive(x, args.label)), 0

    if cmd == "integrate":
        _require(args, ["input", "label", "end"])
        x = jsonio.rpoly_from_json(_load_input(args.input))
        return jsonio.rpoly_to_json(integrate(x, args.label, _end_chain(args.end))), 0

    if cmd == "taylor":
        _require(args, ["input", "end"])
        if args.end not in ("0", "1"):
            raise UsageError("--end must be 0 or 1")
        x = jsonio.rpoly_from_json(_load_input(args.input))
        entries = taylor(x, int(args.end))
        return {"end": int(args.end),
                "entries": [{"word": list(w), "coefficient": jsonio.scalar_to_json(c)}
                            for w, c in entries]}, 0

    if cmd == "poly":
        _require(args, ["input"])
        x = jsonio.rpoly_from_json(_load_input(args.input))
        p = poly_of(x)
        return {"polynomial": jsonio.poly_to_json(p),
                "integral01": p.integrate01(),
                "value0": p.evaluate(0),
                "value1": p.evaluate(1)}, 0

    if cmd == "involution":
        _require(args, ["epsilon", "sigma", "delta"])
        t = _tree_from_args(args)
        cfg = Configuration(t, tuple(args.delta.split(",")))
        img = apply_involution(cfg)
        if img is None:
            return {"unpaired": True}, 0
        return {
            "unpaired": False,
            "sigma": jsonio.pairing_to_json(img.tree.sigma),
            "delta": list(img.delta),
            "correspondence": {str(i): i for i in range(1, len(cfg.delta) + 1)},
        }, 0

    if cmd == "color":
        _require(args, ["l"])
        l = _parse_l(args.l)
        if args.sigma and args.delta:
            _require(args, ["epsilon"])
            t = _tree_from_args(args)
            cfg = Configuration(t, tuple(args.delta.split(",")))
            colors = vertex_colors(cfg, l)
            return {"colors": {v: colors[v] for v in sorted(colors)}}, 0
        out = []
        for t, order in all_pairs(l):
            colors = coloring_for_order(t, order, l)
            out.append({
                "sigma": jsonio.pairing_to_json(t.sigma),
                "order": list(order),
                "colors": {v: colors[v] for v in sorted(colors)},
            })
        return {"l": list(l),
                "pairs": out,
                "colored_sum": jsonio.rpoly_to_json(colored_sum(l))}, 0

    if cmd == "bijection":
        _require(args, ["l"])
        l = _parse_l(args.l)
        if args.invert:
            seq = tuple(int(x) for x in args.invert.split(","))
            t, order = bijection_inverse(seq, l)
            return {"sequence": list(seq),
                    "sigma": jsonio.pairing_to_json(t.sigma),
                    "order": list(order)}, 0
        out = []
        for t, order in all_pairs(l):
            out.append({
                "sigma": jsonio.pairing_to_json(t.sigma),
                "order": list(order),
                "sequence": list(bijection_forward(t, order, l)),
            })
        return {"l": list(l), "forward": out}, 0

    if cmd == "verify":
        _require(args, ["l"])
        report = verify(_parse_l(args.l))
        return report, 0 if report["pass"] else 1

    raise UsageError(f"unknown command {cmd!r}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
