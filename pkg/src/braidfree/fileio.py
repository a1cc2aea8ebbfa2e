"""Parsing and serialization of the structured input files.

Graph file:      {"vertices": 4, "plus": [[1,2]], "minus": [[3,4]]}
Digraph file:    {"vertices": 3, "arcs": [[1,2],[2,1]]}
Spec file:       {"k": 1, "n": [0,0,0], "graph": {...graph file...}}
                 (the graph fields may also sit at the top level)
Arrangement:     {"dim": 3, "hyperplanes": [{"normal": [1,-1,0], "mult": 2}]}
                 (normal entries are integers or "p/q" strings)

Pairs with equal endpoints and duplicated pairs are rejected.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .graphs import DirectedGraph, EdgeBicoloredGraph, MINUS, PLUS
from .multibraid import MultiBraidSpec
from .oracle import MultiArrangement


class InputError(ValueError):
    """Malformed input file or arguments (CLI exit code 2)."""


def _load_obj(source) -> dict:
    if isinstance(source, dict):
        return source
    try:
        with open(source, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{source} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError(f"{source}: expected a JSON object")
    return obj


def _pairs(obj, field) -> list[tuple[int, int]]:
    raw = obj.get(field, [])
    if not isinstance(raw, list):
        raise InputError(f"field {field!r} must be a list of pairs")
    out = []
    for item in raw:
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(x, int) for x in item)):
            raise InputError(f"field {field!r} holds a malformed pair: {item!r}")
        out.append((item[0], item[1]))
    return out


def load_graph(source) -> EdgeBicoloredGraph:
    obj = _load_obj(source)
    if "vertices" not in obj or not isinstance(obj["vertices"], int):
        raise InputError("graph file needs an integer 'vertices' field")
    try:
        return EdgeBicoloredGraph.from_edges(
            obj["vertices"], plus=_pairs(obj, "plus"), minus=_pairs(obj, "minus"))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def load_digraph(source) -> DirectedGraph:
    obj = _load_obj(source)
    if "vertices" not in obj or not isinstance(obj["vertices"], int):
        raise InputError("digraph file needs an integer 'vertices' field")
    try:
        return DirectedGraph.from_arcs(obj["vertices"], _pairs(obj, "arcs"))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def load_spec(source, k=None, n=None) -> MultiBraidSpec:
    """Build a spec from a file, optionally overriding k and the shift list."""
    obj = _load_obj(source)
    graph = load_graph(obj["graph"] if "graph" in obj else obj)
    if k is None:
        k = obj.get("k", 0)
    if n is None:
        n = obj.get("n", [0] * graph.n)
    if not isinstance(k, int):
        raise InputError("'k' must be an integer")
    if not isinstance(n, (list, tuple)) or not all(isinstance(x, int) for x in n):
        raise InputError("'n' must be a list of integers")
    try:
        return MultiBraidSpec(k, tuple(n), graph)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_rational(x) -> Fraction:
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {x!r}") from exc
    raise InputError(f"bad rational {x!r} (use integers or 'p/q' strings)")


def load_arrangement(source) -> MultiArrangement:
    obj = _load_obj(source)
    dim = obj.get("dim")
    if not isinstance(dim, int):
        raise InputError("arrangement file needs an integer 'dim' field")
    raw = obj.get("hyperplanes")
    if not isinstance(raw, list) or not raw:
        raise InputError("arrangement file needs a nonempty 'hyperplanes' list")
    items = []
    for h in raw:
        if not isinstance(h, dict) or "normal" not in h or "mult" not in h:
            raise InputError(f"malformed hyperplane entry: {h!r}")
        normal = [parse_rational(x) for x in h["normal"]]
        if not isinstance(h["mult"], int):
            raise InputError("hyperplane 'mult' must be an integer")
        items.append((normal, h["mult"]))
    try:
        return MultiArrangement.build(dim, items)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def graph_to_obj(g: EdgeBicoloredGraph) -> dict:
    return {
        "vertices": g.n,
        "plus": [list(e) for e in g.edges(PLUS)],
        "minus": [list(e) for e in g.edges(MINUS)],
    }


def digraph_to_obj(g: DirectedGraph) -> dict:
    return {"vertices": g.n, "arcs": [list(a) for a in sorted(g.arcs)]}


def spec_to_obj(spec: MultiBraidSpec) -> dict:
    return {"k": spec.k, "n": list(spec.n), "graph": graph_to_obj(spec.graph)}
