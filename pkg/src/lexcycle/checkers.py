"""Vertex-ordering characterizations and structural checks.

Each triple checker has a trusted ``"reference"`` route (literal loops over
position triples) and a ``"fast"`` route (neighbourhood contiguity or
position bitsets).  Both report the same witness: the violation whose
position tuple is lexicographically smallest.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import CapExceeded, GraphError
from .graph import Graph, Ordering, connected_components


@dataclass(frozen=True)
class OrderViolation:
    kind: str
    witness: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.kind}: {' < '.join(self.witness)}"


def _positions(graph: Graph, sigma: Ordering) -> tuple[list[int], list[int]]:
    """(vertex index at each position, position of each vertex index)."""
    at = sigma.indices(graph).tolist()
    pos = [0] * len(at)
    for p, v in enumerate(at):
        pos[v] = p
    return at, pos


def _pos_masks(graph: Graph, sigma: Ordering) -> tuple[list[int], list[int]]:
    at, pos = _positions(graph, sigma)
    adj = graph.adj
    masks = []
    for v in at:
        m = 0
        for w in adj[v]:
            m |= 1 << pos[w]
        masks.append(m)
    return at, masks


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _witness(kind: str, graph: Graph, at: list[int], *ps: int) -> OrderViolation:
    return OrderViolation(kind, tuple(graph.vertices[at[p]] for p in ps))


def _reference_triples(graph: Graph, sigma: Ordering, kind: str, bad) -> OrderViolation | None:
    at, _ = _positions(graph, sigma)
    adj = graph.adj
    n = len(at)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                va, vb, vc = at[a], at[b], at[c]
                if bad(vc in adj[va], vb in adj[va], vc in adj[vb]):
                    return _witness(kind, graph, at, a, b, c)
    return None


def _contiguous(graph: Graph, sigma: Ordering, both_sides: bool) -> bool:
    at, pos = _positions(graph, sigma)
    adj = graph.adj
    for p, v in enumerate(at):
        right = [pos[w] for w in adj[v] if pos[w] > p]
        if right and max(right) != p + len(right):
            return False
        if both_sides:
            left = [pos[w] for w in adj[v] if pos[w] < p]
            if left and min(left) != p - len(left):
                return False
    return True


def _scan(graph: Graph, sigma: Ordering, kind: str) -> OrderViolation | None:
    """Lexicographically first (a, b, c) violation via position bitsets."""
    at, masks = _pos_masks(graph, sigma)
    n = len(at)
    full = (1 << n) - 1
    for a in range(n):
        right_a = masks[a] & (full ^ ((1 << (a + 1)) - 1))
        if not right_a:
            continue
        for b in range(a + 1, right_a.bit_length() - 1):
            after_b = full ^ ((1 << (b + 1)) - 1)
            ab = (masks[a] >> b) & 1
            cand = masks[a] & after_b
            if kind == "pi":
                bad = cand if not ab else cand & ~masks[b]
            elif kind == "interval":
                bad = 0 if ab else cand
            else:  # cocomparability
                bad = 0 if ab else cand & ~masks[b]
            if bad:
                return _witness(kind, graph, at, a, b, _low(bad))
    return None


def check_pi_order(graph: Graph, sigma: Ordering, method: str = "fast") -> OrderViolation | None:
    """For all a < b < c: ac in E implies ab in E and bc in E."""
    if method == "reference":
        return _reference_triples(graph, sigma, "pi", lambda ac, ab, bc: ac and not (ab and bc))
    if _contiguous(graph, sigma, both_sides=True):
        return None
    return _scan(graph, sigma, "pi")


def check_i_order(graph: Graph, sigma: Ordering, method: str = "fast") -> OrderViolation | None:
    """For all a < b < c: ac in E implies ab in E."""
    if method == "reference":
        return _reference_triples(graph, sigma, "interval", lambda ac, ab, bc: ac and not ab)
    if _contiguous(graph, sigma, both_sides=False):
        return None
    return _scan(graph, sigma, "interval")


def check_cocomp_order(graph: Graph, sigma: Ordering, method: str = "fast") -> OrderViolation | None:
    """For all a < b < c: ac in E implies ab in E or bc in E."""
    if method == "reference":
        return _reference_triples(graph, sigma, "cocomparability", lambda ac, ab, bc: ac and not ab and not bc)
    return _scan(graph, sigma, "cocomparability")


def bad_lexbfs_triples(graph: Graph, sigma: Ordering) -> Iterator[tuple[str, str, str]]:
    """Triples a < b < c with ac in E and ab not in E, in lexicographic position order."""
    at, masks = _pos_masks(graph, sigma)
    n = len(at)
    names = graph.vertices
    for a in range(n):
        for b in range(a + 1, n):
            if (masks[a] >> b) & 1:
                continue
            cand = masks[a] >> (b + 1)
            c = b + 1
            while cand:
                if cand & 1:
                    yield names[at[a]], names[at[b]], names[at[c]]
                cand >>= 1
                c += 1


def check_lexbfs_4pc(graph: Graph, sigma: Ordering, method: str = "fast") -> OrderViolation | None:
    """Every bad triple a < b < c needs some d < a with db in E and dc not in E."""
    if method == "reference":
        at, _ = _positions(graph, sigma)
        adj = graph.adj
        n = len(at)
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    va, vb, vc = at[a], at[b], at[c]
                    if vc in adj[va] and vb not in adj[va]:
                        if not any(vb in adj[at[d]] and vc not in adj[at[d]] for d in range(a)):
                            return _witness("lexbfs4pc", graph, at, a, b, c)
        return None
    at, masks = _pos_masks(graph, sigma)
    n = len(at)
    for a in range(n):
        before_a = (1 << a) - 1
        for b in range(a + 1, n):
            if (masks[a] >> b) & 1:
                continue
            private_b = masks[b] & before_a
            cand = masks[a] >> (b + 1)
            c = b + 1
            while cand:
                if cand & 1 and not (private_b & ~masks[c]):
                    return _witness("lexbfs4pc", graph, at, a, b, c)
                cand >>= 1
                c += 1
    return None


def validate_transitive_orientation(graph: Graph, sigma: Ordering) -> OrderViolation | None:
    """Orient each non-edge forward along ``sigma`` and check the orientation is transitive.

    Works on the complement explicitly: for u -> v -> w in the complement,
    u -> w must also be a complement arc.  Succeeds exactly when ``sigma`` is
    a cocomparability ordering of ``graph``.
    """
    at, pos = _positions(graph, sigma)
    n = len(at)
    adj = graph.adj
    out_arcs = []
    for p, v in enumerate(at):
        arcs = sorted(pos[w] for w in range(n) if w != v and w not in adj[v] and pos[w] > p)
        out_arcs.append(arcs)
    out_sets = [set(a) for a in out_arcs]
    for u in range(n):
        for v in out_arcs[u]:
            for w in out_arcs[v]:
                if w not in out_sets[u]:
                    return _witness("transitive", graph, at, u, v, w)
    return None


def flipping_check(graph: Graph, sigma: Ordering, tau: Ordering) -> tuple[str, str] | None:
    """First non-adjacent pair (in ``sigma`` order) whose relative order ``tau`` keeps."""
    at, pos_s = _positions(graph, sigma)
    _, pos_t = _positions(graph, tau)
    adj = graph.adj
    n = len(at)
    for i in range(n):
        u = at[i]
        for j in range(i + 1, n):
            v = at[j]
            if v not in adj[u] and pos_t[u] < pos_t[v]:
                return graph.vertices[u], graph.vertices[v]
    return None


def lmpn(graph: Graph, sigma: Ordering, a: str, b: str) -> str | None:
    """Leftmost vertex of ``sigma`` adjacent to ``a`` but not to ``b``."""
    if a == b:
        raise GraphError("lmpn needs two distinct vertices")
    na, nb = graph.neighbors(a), graph.neighbors(b)
    for d in sigma:
        if d != b and d in na and d not in nb:
            return d
    return None


class CliqueSplit(NamedTuple):
    index: int
    suffix_is_clique: bool


def _is_clique(graph: Graph, vertices: list[int]) -> bool:
    adj = graph.adj
    return all(v in adj[u] for u, v in combinations(vertices, 2))


def clique_split(graph: Graph, sigma: Ordering) -> CliqueSplit:
    """Largest ``i`` with the first ``i`` vertices a clique, and whether the rest is one too."""
    at, _ = _positions(graph, sigma)
    adj = graph.adj
    i = 0
    while i < len(at) and all(at[j] in adj[at[i]] for j in range(i)):
        i += 1
    return CliqueSplit(i, _is_clique(graph, at[i:]))


# -- asteroidal sets ------------------------------------------------------


def _components_avoiding(graph: Graph) -> list[list[int]]:
    """For each vertex a: component labels of G - N[a] (-1 on N[a])."""
    return [connected_components(graph, removed=graph.adj[a] | {a}) for a in range(graph.n)]


def is_asteroidal_set(graph: Graph, members: Iterable[str]) -> bool:
    """Each member's removal (with its closed neighbourhood) leaves the others in one component."""
    idx = [graph.index(v) for v in members]
    if len(set(idx)) != len(idx):
        raise GraphError("asteroidal set has repeated vertices")
    for a in idx:
        comp = connected_components(graph, removed=graph.adj[a] | {a})
        labels = {comp[x] for x in idx if x != a}
        if -1 in labels or len(labels) > 1:
            return False
    return True


def asteroidal_number(graph: Graph, size_cap: int | None = None) -> int:
    """Largest asteroidal set size, by growing asteroidal sets level by level.

    Subsets of asteroidal sets are asteroidal, so every set of size k+1 is
    reached by extending one of size k with a larger-indexed vertex.  If a set
    larger than ``size_cap`` exists, :class:`CapExceeded` carries the bound.
    """
    n = graph.n
    if n == 0:
        return 0
    comp = _components_avoiding(graph)
    level: list[tuple[int, ...]] = [(v,) for v in range(n)]
    size = 1
    while True:
        nxt: list[tuple[int, ...]] = []
        for s in level:
            for v in range(s[-1] + 1, n):
                cv = comp[v]
                ref = cv[s[0]]
                if ref == -1 or any(cv[x] != ref for x in s[1:]):
                    continue
                ok = True
                for a in s:
                    ca = comp[a]
                    target = ca[v]
                    if target == -1 or any(ca[x] != target for x in s if x != a):
                        ok = False
                        break
                if ok:
                    nxt.append(s + (v,))
        if not nxt:
            return size
        if size_cap is not None and size >= size_cap:
            raise CapExceeded(f"asteroidal sets larger than cap {size_cap} exist", lower_bound=size + 1)
        level = nxt
        size += 1


# -- induced patterns -----------------------------------------------------


def find_induced(graph: Graph, pattern: Graph) -> dict[str, str] | None:
    """Backtracking search for ``pattern`` as an induced subgraph of ``graph``.

    Pattern vertices are placed in BFS order from a maximum-degree vertex so
    each new vertex (after the first) is anchored at a mapped neighbour.
    """
    k = pattern.n
    if k == 0:
        return {}
    padj = pattern.adj
    gadj = graph.adj
    gdeg = [len(s) for s in gadj]
    order: list[int] = []
    seen: set[int] = set()
    for root in sorted(range(k), key=lambda p: (-len(padj[p]), p)):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            p = queue.pop(0)
            order.append(p)
            for q in sorted(padj[p]):
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
    anchor = []
    for t, p in enumerate(order):
        earlier = [q for q in order[:t] if q in padj[p]]
        anchor.append(earlier[0] if earlier else None)

    image = [-1] * k
    used: set[int] = set()

    def fits(t: int, v: int) -> bool:
        p = order[t]
        if v in used or gdeg[v] < len(padj[p]):
            return False
        for q in order[:t]:
            if (q in padj[p]) != (image[q] in gadj[v]):
                return False
        return True

    def rec(t: int) -> bool:
        if t == k:
            return True
        a = anchor[t]
        cands = sorted(gadj[image[a]]) if a is not None else range(graph.n)
        for v in cands:
            if fits(t, v):
                image[order[t]] = v
                used.add(v)
                if rec(t + 1):
                    return True
                used.discard(v)
                image[order[t]] = -1
        return False

    if not rec(0):
        return None
    return {pattern.vertices[p]: graph.vertices[image[p]] for p in range(k)}


def find_induced_domino(graph: Graph) -> dict[str, str] | None:
    from .constructions import gen_domino

    return find_induced(graph, gen_domino())


def find_induced_ladder(graph: Graph, k: int) -> dict[str, str] | None:
    from .constructions import gen_ladder

    return find_induced(graph, gen_ladder(k))
