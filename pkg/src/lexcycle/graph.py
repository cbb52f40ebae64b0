"""Graph and ordering data model plus the basic graph operations.

Vertices are named by string tokens.  Internally every graph maps its tokens
to dense indices ``0..n-1`` following the *input order* (the order in which
vertices were declared), and that order is part of the graph's identity.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from typing import overload

import numpy as np

from .errors import GraphError

INF = float("inf")


def _check_token(name: object) -> str:
    if not isinstance(name, str) or not name or any(ch.isspace() for ch in name) or "#" in name:
        raise GraphError(f"invalid vertex name {name!r}: need a non-empty token without whitespace or '#'")
    return name


class Graph:
    """Immutable simple undirected graph with named vertices.

    Edge endpoints missing from ``vertices`` are appended in order of first
    appearance, the same rule the text format uses.

    >>> g = Graph("abc", [("a", "b"), ("b", "c")])
    >>> sorted(g.neighbors("b"))
    ['a', 'c']
    """

    __slots__ = ("_names", "_index", "_adj", "_csr", "_m")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()):
        names: list[str] = []
        index: dict[str, int] = {}
        for v in vertices:
            _check_token(v)
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = len(names)
            names.append(v)
        adj: list[set[int]] = [set() for _ in names]
        for u, w in edges:
            for x in (u, w):
                if x not in index:
                    _check_token(x)
                    index[x] = len(names)
                    names.append(x)
                    adj.append(set())
            i, j = index[u], index[w]
            if i == j:
                raise GraphError(f"self-loop on {u!r}")
            adj[i].add(j)
            adj[j].add(i)
        self._names = tuple(names)
        self._index = index
        self._adj = tuple(frozenset(s) for s in adj)
        self._m = sum(len(s) for s in adj) // 2
        self._csr = None

    @classmethod
    def _from_index_sets(cls, names: Sequence[str], adj: Sequence[Iterable[int]]) -> Graph:
        # trusted constructor: names already validated, adjacency symmetric
        g = cls.__new__(cls)
        g._names = tuple(names)
        g._index = {v: i for i, v in enumerate(g._names)}
        g._adj = tuple(frozenset(s) for s in adj)
        g._m = sum(len(s) for s in g._adj) // 2
        g._csr = None
        return g

    @classmethod
    def from_edge_array(cls, n: int, edges: np.ndarray, names: Sequence[str] | None = None) -> Graph:
        """Build a graph on vertices ``v0..v{n-1}`` (or ``names``) from an ``(m, 2)`` index array.

        Duplicate pairs are merged; self-loops are rejected.  Adjacency is
        stored in compressed form first, so this is the fast path for large
        inputs.
        """
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if len(edges) and (edges.min() < 0 or edges.max() >= n):
            raise GraphError("edge index out of range")
        if np.any(edges[:, 0] == edges[:, 1]):
            raise GraphError("self-loop in edge array")
        lo = np.minimum(edges[:, 0], edges[:, 1])
        hi = np.maximum(edges[:, 0], edges[:, 1])
        key = np.unique(lo * n + hi)
        lo, hi = key // n, key % n
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        if names is None:
            names = [f"v{i}" for i in range(n)]
        elif len(names) != n:
            raise GraphError("names length does not match n")
        g = cls.__new__(cls)
        g._names = tuple(_check_token(v) for v in names)
        g._index = {v: i for i, v in enumerate(g._names)}
        if len(g._index) != n:
            raise GraphError("duplicate vertex names")
        g._adj = None
        g._m = int(len(key))
        g._csr = (indptr, dst.astype(np.int64))
        return g

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._names)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._names

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Index-level adjacency sets (position ``i`` is vertex ``vertices[i]``)."""
        if self._adj is None:
            indptr, indices = self._csr
            self._adj = tuple(
                frozenset(indices[indptr[i]:indptr[i + 1]].tolist()) for i in range(self.n)
            )
        return self._adj

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Compressed adjacency ``(indptr, indices)`` with each row sorted."""
        if self._csr is None:
            rows = [sorted(s) for s in self._adj]
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            np.cumsum([len(r) for r in rows], out=indptr[1:])
            indices = np.fromiter((j for r in rows for j in r), dtype=np.int64, count=int(indptr[-1]))
            self._csr = (indptr, indices)
        return self._csr

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[str]:
        return iter(self._names)

    def neighbors(self, v: str) -> frozenset[str]:
        names = self._names
        return frozenset(names[j] for j in self.adj[self.index(v)])

    def closed_neighbors(self, v: str) -> frozenset[str]:
        return self.neighbors(v) | {v}

    def degree(self, v: str) -> int:
        return len(self.adj[self.index(v)])

    def has_edge(self, u: str, v: str) -> bool:
        return self.index(v) in self.adj[self.index(u)]

    def edges(self) -> Iterator[tuple[str, str]]:
        """Edges in canonical order: sorted by (min index, max index)."""
        names = self._names
        for i, nbrs in enumerate(self.adj):
            for j in sorted(nbrs):
                if j > i:
                    yield names[i], names[j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._names == other._names and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self._names, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Ordering(Sequence):
    """A permutation of vertex names; ``position`` is 1-based.

    Orderings compare equal by their sequence of names and are hashable, so
    they can key the seen-map of cycle detection directly.
    """

    __slots__ = ("_seq", "_rank")

    def __init__(self, seq: Iterable[str]):
        self._seq = tuple(seq)
        self._rank = None
        if len(self.rank) != len(self._seq):
            raise GraphError("ordering lists a vertex more than once")

    @property
    def seq(self) -> tuple[str, ...]:
        return self._seq

    @property
    def rank(self) -> dict[str, int]:
        """0-based position map."""
        if self._rank is None:
            self._rank = {v: i for i, v in enumerate(self._seq)}
        return self._rank

    def position(self, v: str) -> int:
        try:
            return self.rank[v] + 1
        except KeyError:
            raise GraphError(f"vertex {v!r} not in ordering") from None

    def precedes(self, u: str, v: str) -> bool:
        return self.rank[u] < self.rank[v]

    def dual(self) -> Ordering:
        return Ordering(self._seq[::-1])

    def restrict(self, subset: Iterable[str]) -> Ordering:
        keep = set(subset)
        return Ordering(v for v in self._seq if v in keep)

    def indices(self, graph: Graph) -> np.ndarray:
        """Graph indices in ordering order; checks the vertex sets agree."""
        check_ordering(graph, self)
        idx = graph._index
        return np.fromiter((idx[v] for v in self._seq), dtype=np.int64, count=len(self._seq))

    @overload
    def __getitem__(self, i: int) -> str: ...
    @overload
    def __getitem__(self, i: slice) -> tuple[str, ...]: ...

    def __getitem__(self, i):
        return self._seq[i]

    def __len__(self) -> int:
        return len(self._seq)

    def __iter__(self) -> Iterator[str]:
        return iter(self._seq)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Ordering):
            return self._seq == other._seq
        if isinstance(other, (tuple, list)):
            return self._seq == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._seq)

    def __str__(self) -> str:
        return " ".join(self._seq)

    def __repr__(self) -> str:
        return f"Ordering({' '.join(self._seq)!r})"


def check_ordering(graph: Graph, order: Ordering) -> None:
    if len(order) != graph.n or any(v not in graph._index for v in order.seq):
        raise GraphError("ordering does not cover exactly the graph's vertices")


def input_order(graph: Graph) -> Ordering:
    return Ordering(graph.vertices)


def dual(order: Ordering) -> Ordering:
    return order.dual()


def first_difference(sigma: Ordering, tau: Ordering) -> int | None:
    """1-based index of the first position where two orderings differ."""
    if set(sigma.seq) != set(tau.seq):
        raise GraphError("orderings are over different vertex sets")
    for j, (u, v) in enumerate(zip(sigma.seq, tau.seq), start=1):
        if u != v:
            return j
    return None


# -- graph operations ----------------------------------------------------


def complement(graph: Graph) -> Graph:
    n = graph.n
    full = frozenset(range(n))
    return Graph._from_index_sets(graph.vertices, [full - nb - {i} for i, nb in enumerate(graph.adj)])


def induced_subgraph(graph: Graph, subset: Iterable[str]) -> Graph:
    keep = {graph.index(v) for v in subset}
    kept = sorted(keep)
    remap = {old: new for new, old in enumerate(kept)}
    names = [graph.vertices[i] for i in kept]
    return Graph._from_index_sets(names, [{remap[j] for j in graph.adj[i] if j in keep} for i in kept])


def is_module(graph: Graph, module: Iterable[str]) -> bool:
    """True iff every vertex outside ``module`` sees all of it or none of it."""
    members = {graph.index(v) for v in module}
    if not members:
        raise GraphError("module must be nonempty")
    size = len(members)
    for i, nbrs in enumerate(graph.adj):
        if i in members:
            continue
        hits = len(nbrs & members)
        if hits not in (0, size):
            return False
    return True


class ModularPartition:
    """A partition of V(G) into modules, validated on construction.

    Quotient vertices are named after each block's first vertex in input
    order unless explicit ``names`` are given.
    """

    def __init__(self, graph: Graph, blocks: Iterable[Iterable[str]], names: Sequence[str] | None = None):
        blocks = [frozenset(b) for b in blocks]
        seen: dict[str, int] = {}
        for k, block in enumerate(blocks):
            if not block:
                raise GraphError("empty block in partition")
            for v in block:
                graph.index(v)
                if v in seen:
                    raise GraphError(f"vertex {v!r} appears in two blocks")
                seen[v] = k
        if len(seen) != graph.n:
            raise GraphError("blocks do not cover every vertex")
        for block in blocks:
            if not is_module(graph, block):
                raise GraphError(f"block {sorted(block)} is not a module")
        # canonical block order: by first member in input order
        first = [min(graph.index(v) for v in b) for b in blocks]
        order = sorted(range(len(blocks)), key=first.__getitem__)
        self.graph = graph
        self.blocks: tuple[frozenset[str], ...] = tuple(blocks[k] for k in order)
        if names is None:
            self.names = tuple(graph.vertices[first[k]] for k in order)
        else:
            if len(names) != len(blocks):
                raise GraphError("one name per block required")
            self.names = tuple(_check_token(names[k]) for k in order)
        self._block_of = {v: k for k, b in enumerate(self.blocks) for v in b}

    def block_of(self, v: str) -> int:
        return self._block_of[v]

    def __len__(self) -> int:
        return len(self.blocks)


def quotient_graph(graph: Graph, partition: ModularPartition) -> Graph:
    """Contract each block; two blocks are adjacent iff their members are."""
    if partition.graph is not graph and partition.graph != graph:
        raise GraphError("partition belongs to a different graph")
    block_idx = [{graph.index(v) for v in b} for b in partition.blocks]
    k = len(block_idx)
    adj: list[set[int]] = [set() for _ in range(k)]
    for p in range(k):
        for q in range(p + 1, k):
            size = len(block_idx[q])
            counts = {len(graph.adj[u] & block_idx[q]) for u in block_idx[p]}
            if counts != {0} and counts != {size}:
                raise GraphError("blocks are not uniformly adjacent")
            if counts == {size}:
                adj[p].add(q)
                adj[q].add(p)
    return Graph._from_index_sets(partition.names, adj)


def block_order(order: Ordering, partition: ModularPartition, by: str = "first") -> Ordering:
    """Order the blocks of ``partition`` as seen by ``order``.

    ``by="first"`` ranks blocks by their earliest member (discovery time of a
    search output); ``by="last"`` ranks by their rightmost member, which is
    the position a block competes with under the rightmost-wins tie-break.
    """
    if by not in ("first", "last"):
        raise ValueError("by must be 'first' or 'last'")
    rank = order.rank
    key = min if by == "first" else max
    scored = [(key(rank[v] for v in b), name) for b, name in zip(partition.blocks, partition.names)]
    return Ordering(name for _, name in sorted(scored))


def bfs_distances(graph: Graph, source: str) -> list[float]:
    """Hop distances from ``source`` indexed by vertex index (``INF`` if unreachable)."""
    dist: list[float] = [INF] * graph.n
    s = graph.index(source)
    dist[s] = 0
    queue = deque([s])
    adj = graph.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def distance(graph: Graph, u: str, v: str) -> float:
    """Shortest-path length, or ``INF`` when ``u`` and ``v`` are disconnected."""
    d = bfs_distances(graph, u)[graph.index(v)]
    return int(d) if d != INF else INF


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    return INF not in bfs_distances(graph, graph.vertices[0])


def diameter(graph: Graph) -> int:
    if graph.n == 0:
        raise GraphError("diameter of the empty graph is undefined")
    best = 0
    for v in graph.vertices:
        dist = bfs_distances(graph, v)
        far = max(dist)
        if far == INF:
            raise GraphError("diameter of a disconnected graph is undefined")
        best = max(best, int(far))
    return best


def connected_components(graph: Graph, removed: Iterable[int] = ()) -> list[int]:
    """Component label per vertex index; vertices in ``removed`` get ``-1``."""
    label = [-1] * graph.n
    blocked = set(removed)
    adj = graph.adj
    comp = 0
    for s in range(graph.n):
        if label[s] != -1 or s in blocked:
            continue
        label[s] = comp
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if label[w] == -1 and w not in blocked:
                    label[w] = comp
                    stack.append(w)
        comp += 1
    return label
