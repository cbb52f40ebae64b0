"""Text formats for graphs, orderings and 0/1 matrices.

Graph file::

    # comment
    v isolated_vertex      declare a vertex (fixes its place in input order)
    a b                    an edge; unseen endpoints are declared on the fly

Ordering file: whitespace-separated vertex names (comments allowed).

Matrix file: a ``p q`` header, then ``p`` lines of ``q`` characters in {0,1}.
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphError, ParseError
from .graph import Graph, Ordering


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph(text: str) -> Graph:
    names: list[str] = []
    declared: set[str] = set()
    edges: list[tuple[str, str]] = []
    seen_edges: set[frozenset[str]] = set()

    def declare(v: str, lineno: int, explicit: bool) -> None:
        if v in declared:
            if explicit:
                raise ParseError(f"duplicate vertex {v!r}", lineno)
            return
        declared.add(v)
        names.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'v <name>' or '<u> <w>', got {raw.strip()!r}", lineno)
        a, b = tokens
        if a == "v":
            declare(b, lineno, explicit=True)
            continue
        if a == b:
            raise ParseError(f"self-loop on {a!r}", lineno)
        key = frozenset((a, b))
        if key in seen_edges:
            raise ParseError(f"duplicate edge {a} {b}", lineno)
        seen_edges.add(key)
        declare(a, lineno, explicit=False)
        declare(b, lineno, explicit=False)
        edges.append((a, b))
    try:
        return Graph(names, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def serialize_graph(graph: Graph) -> str:
    """Canonical text: every vertex declared in input order, then sorted edges."""
    lines = [f"v {v}" for v in graph.vertices]
    for u, w in graph.edges():
        # "v <w>" would read back as a declaration
        lines.append(f"{w} {u}" if u == "v" else f"{u} {w}")
    return "\n".join(lines) + "\n"


def parse_ordering(text: str, graph: Graph | None = None) -> Ordering:
    tokens = [tok for raw in text.splitlines() for tok in _strip(raw).split()]
    if not tokens:
        raise ParseError("empty ordering")
    try:
        order = Ordering(tokens)
        if graph is not None:
            order.indices(graph)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    return order


def serialize_ordering(order: Ordering) -> str:
    return " ".join(order.seq) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def read_ordering(path: str | Path, graph: Graph | None = None) -> Ordering:
    return parse_ordering(Path(path).read_text(encoding="utf-8"), graph)
