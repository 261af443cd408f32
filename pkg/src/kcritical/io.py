"""Edge-list, DOT and JSON serialisation of bipartite graphs."""

from __future__ import annotations

import json

from .errors import OutOfRange
from .graph import BipartiteGraph


class FormatError(ValueError):
    pass


def write_edges(G: BipartiteGraph) -> str:
    """First line ``n m``, then one ``i j`` line per edge in ascending order."""
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{i} {j}" for i, j in G.edges())
    return "\n".join(lines) + "\n"


def read_edges(text: str) -> BipartiteGraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise FormatError("empty edge list")
    try:
        header = [int(t) for t in rows[0]]
        pairs = [tuple(int(t) for t in r) for r in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"non-integer token: {exc}") from None
    if len(header) != 2 or any(len(p) != 2 for p in pairs):
        raise FormatError("every line must hold exactly two integers")
    try:
        return BipartiteGraph.build(header[0], header[1], pairs)
    except OutOfRange as exc:
        raise FormatError(str(exc)) from None


def to_dot(G: BipartiteGraph) -> str:
    out = ["graph G {", "  subgraph U {"]
    out += [f"    u{i};" for i in range(G.n)]
    out += ["  }", "  subgraph V {"]
    out += [f"    v{j};" for j in range(G.m)]
    out += ["  }"]
    out += [f"  u{i} -- v{j};" for i, j in G.edges()]
    out.append("}")
    return "\n".join(out) + "\n"


def graph_to_json(G: BipartiteGraph) -> dict:
    return {"n": G.n, "m": G.m, "e": G.e, "edges": [list(p) for p in G.edges()]}


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
