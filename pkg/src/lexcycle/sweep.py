"""Lexicographic searches with the ``+`` tie-break and iterated sweep sequences.

Two engines compute the same orderings:

* ``"fast"`` -- compiled kernels: stable partition refinement for LexBFS
  (linear time), a priority-ordered queue for BFS, and move-to-front
  refinement for LexDFS.
* ``"naive"`` -- explicit label words, exactly as the textbook pseudocode
  writes them.  Slow, but it is the reference the fast engine is tested
  against.

In both, a tie among maximal labels goes to the vertex that is rightmost in
the previous ordering.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .errors import CapExceeded, GraphError
from .graph import Graph, Ordering, input_order


class SearchKind(str, Enum):
    LEXBFS = "lexbfs"
    LEXDFS = "lexdfs"
    BFS = "bfs"

    @classmethod
    def parse(cls, value: SearchKind | str) -> SearchKind:
        if isinstance(value, SearchKind):
            return value
        key = str(value).strip().lower().rstrip("+")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown search {value!r}; expected one of lexbfs, lexdfs, bfs") from None


ENGINES = ("fast", "naive")


def _fast_sweep(search: SearchKind, graph: Graph, prio: np.ndarray) -> np.ndarray:
    indptr, indices = graph.csr()
    n = graph.n
    if search is SearchKind.LEXDFS:
        return _kernels.lexdfs_plus(n, indptr, indices, prio)
    sadj = _kernels.priority_adjacency(n, indptr, indices, prio)
    if search is SearchKind.LEXBFS:
        return _kernels.lexbfs_plus(n, indptr, sadj, prio)
    return _kernels.bfs_plus(n, indptr, sadj, prio)


def _naive_sweep(search: SearchKind, graph: Graph, sigma_idx: list[int]) -> list[int]:
    n = graph.n
    adj = graph.adj
    pos = [0] * n
    for p, v in enumerate(sigma_idx):
        pos[v] = p
    unnumbered = set(range(n))
    out: list[int] = []
    if search is SearchKind.BFS:
        # label = step at which the first numbered neighbour was visited; earlier wins
        parent: list[int | None] = [None] * n
        for i in range(1, n + 1):
            v = max(
                unnumbered,
                key=lambda u: (parent[u] is not None, -(parent[u] or 0), pos[u]),
            )
            unnumbered.remove(v)
            out.append(v)
            for w in adj[v]:
                if w in unnumbered and parent[w] is None:
                    parent[w] = i
        return out

    labels: list[list[int]] = [[] for _ in range(n)]
    for i in range(1, n + 1):
        v = max(unnumbered, key=lambda u: (labels[u], pos[u]))
        unnumbered.remove(v)
        out.append(v)
        for w in adj[v]:
            if w in unnumbered:
                if search is SearchKind.LEXBFS:
                    labels[w].append(n - i)
                else:
                    labels[w].insert(0, i)
    return out


def plus_sweep(search: SearchKind | str, graph: Graph, sigma: Ordering, *, engine: str = "fast") -> Ordering:
    """Run ``search`` on ``graph`` breaking every remaining tie by the rightmost vertex of ``sigma``."""
    search = SearchKind.parse(search)
    idx = sigma.indices(graph)
    names = graph.vertices
    if engine == "fast":
        out = _fast_sweep(search, graph, idx[::-1].copy()).tolist()
    elif engine == "naive":
        out = _naive_sweep(search, graph, idx.tolist())
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return Ordering(names[i] for i in out)


def first_sweep(
    search: SearchKind | str, graph: Graph, tiebreak: Ordering | None = None, *, engine: str = "fast"
) -> Ordering:
    """A plain search; unresolved ties follow ``tiebreak`` (default: the graph's input order)."""
    return plus_sweep(search, graph, tiebreak if tiebreak is not None else input_order(graph), engine=engine)


@dataclass(frozen=True)
class SweepTrace:
    search: SearchKind
    seed: Ordering
    orderings: tuple[Ordering, ...]

    def __post_init__(self):
        if not self.orderings:
            raise GraphError("a sweep trace holds at least one ordering")

    def __len__(self) -> int:
        return len(self.orderings)

    def __getitem__(self, i: int) -> Ordering:
        return self.orderings[i]

    @property
    def last(self) -> Ordering:
        return self.orderings[-1]


def sweep_sequence(
    search: SearchKind | str, graph: Graph, seed: Ordering, k: int, *, engine: str = "fast"
) -> SweepTrace:
    """``orderings[0] = plus_sweep(seed)`` and each later entry sweeps the one before."""
    if k < 1:
        raise ValueError("sweep count must be at least 1")
    search = SearchKind.parse(search)
    out = []
    cur = seed
    for _ in range(k):
        cur = plus_sweep(search, graph, cur, engine=engine)
        out.append(cur)
    return SweepTrace(search, seed, tuple(out))


def enumerate_lexbfs_orderings(graph: Graph, cap: int | None = 1_000_000) -> Iterator[Ordering]:
    """Yield every LexBFS ordering of ``graph`` exactly once.

    Backtracks over the maximal-label tie set at each step (the first class
    of the refinement).  If more than ``cap`` orderings exist, the first
    ``cap`` are yielded and then :class:`CapExceeded` is raised.
    """
    adj = graph.adj
    names = graph.vertices
    prefix: list[int] = []
    count = 0

    def rec(classes: list[list[int]]) -> Iterator[Ordering]:
        nonlocal count
        if not classes:
            if cap is not None and count >= cap:
                raise CapExceeded(f"more than {cap} LexBFS orderings", lower_bound=count)
            count += 1
            yield Ordering(names[i] for i in prefix)
            return
        head, rest = classes[0], classes[1:]
        for v in head:
            nbrs = adj[v]
            refined: list[list[int]] = []
            remaining = [u for u in head if u != v]
            for cls in ([remaining] if remaining else []) + rest:
                inside = [u for u in cls if u in nbrs]
                outside = [u for u in cls if u not in nbrs]
                if inside:
                    refined.append(inside)
                if outside:
                    refined.append(outside)
            prefix.append(v)
            yield from rec(refined)
            prefix.pop()

    if graph.n == 0:
        return
    yield from rec([list(range(graph.n))])
