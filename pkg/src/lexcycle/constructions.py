"""Named fixture graphs, the Starjoin operator and seeded random generators.

Fixture graphs and their orderings ship as text files under ``data/``; they
are loaded, never rebuilt, so the files are the single source of truth.
"""

from __future__ import annotations

import random
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .errors import GraphError
from .graph import Graph, Ordering, complement
from .io import parse_graph, parse_ordering


@dataclass(frozen=True)
class Fixture:
    graph: Graph
    orderings: Mapping[str, Ordering] = field(default_factory=dict)

    def __post_init__(self):
        for name, order in self.orderings.items():
            try:
                order.indices(self.graph)
            except GraphError as exc:
                raise GraphError(f"ordering {name!r}: {exc}") from None

    def __getitem__(self, name: str) -> Ordering:
        return self.orderings[name]


def _data_path(*parts: str):
    node = resources.files("lexcycle").joinpath("data")
    for part in parts:
        node = node.joinpath(part)
    return node


def _data_text(*parts: str) -> str:
    return _data_path(*parts).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Fixture:
    """Load ``data/<name>/graph.txt`` plus every other ``.txt`` there as a named ordering."""
    folder = _data_path(name)
    if not folder.is_dir():
        raise KeyError(f"no fixture named {name!r}")
    graph = parse_graph(_data_text(name, "graph.txt")) if folder.joinpath("graph.txt").is_file() else None
    orderings = {}
    for entry in sorted(folder.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".txt") and entry.name != "graph.txt":
            orderings[entry.name[:-4]] = parse_ordering(entry.read_text(encoding="utf-8"))
    if graph is None:
        raise KeyError(f"fixture {name!r} has no graph.txt")
    return Fixture(graph, orderings)


def fixture_g3() -> Fixture:
    """Nine-vertex graph whose LexBFS+ sweeps from ``sigma1`` cycle with period 3."""
    return load_fixture("g3")


def fixture_g4() -> Fixture:
    """Twelve-vertex graph whose LexBFS+ sweeps from ``mu1`` cycle with period 4."""
    return load_fixture("g4")


def fixture_lexdfs_example() -> Fixture:
    """Cocomparability graph (witness ``tau``) where LexDFS+ cycles through four non-cocomparability orders."""
    return load_fixture("lexdfs")


def g6_trace() -> list[Ordering]:
    """Expected ``sigma1..sigma8`` of LexBFS+ on the complement of the 6-two-chain from ``tau``."""
    fx = load_fixture_orderings("g6")
    return [fx[f"sigma{i}"] for i in range(1, 9)]


@lru_cache(maxsize=None)
def load_fixture_orderings(name: str) -> dict[str, Ordering]:
    folder = _data_path(name)
    return {
        entry.name[:-4]: parse_ordering(entry.read_text(encoding="utf-8"))
        for entry in sorted(folder.iterdir(), key=lambda p: p.name)
        if entry.name.endswith(".txt")
    }


# -- small named graphs ----------------------------------------------------


def complete_graph(n: int, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i}" for i in range(n)]
    return Graph(names, combinations(names, 2))


def edgeless_graph(n: int, prefix: str = "v") -> Graph:
    return Graph([f"{prefix}{i}" for i in range(n)])


def path_graph(n: int, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i}" for i in range(n)]
    return Graph(names, zip(names, names[1:]))


def cycle_graph(n: int, prefix: str = "v") -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    names = [f"{prefix}{i}" for i in range(n)]
    return Graph(names, list(zip(names, names[1:])) + [(names[-1], names[0])])


def star_graph(leaves: int) -> Graph:
    names = ["c"] + [f"l{i}" for i in range(1, leaves + 1)]
    return Graph(names, [("c", v) for v in names[1:]])


def subdivided_claw() -> Graph:
    """The claw with each edge subdivided once: a tree containing an asteroidal triple."""
    return Graph(
        ["c", "m1", "m2", "m3", "l1", "l2", "l3"],
        [("c", "m1"), ("c", "m2"), ("c", "m3"), ("m1", "l1"), ("m2", "l2"), ("m3", "l3")],
    )


def gen_domino() -> Graph:
    return Graph("abcdef", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("c", "e"), ("d", "f"), ("e", "f")])


def gen_ladder(k: int) -> Graph:
    """``k`` induced 4-cycles chained along rungs; ``gen_ladder(1)`` is C4, ``gen_ladder(2)`` a domino."""
    if k < 1:
        raise GraphError("ladder needs k >= 1")
    xs = ["x"] + [f"x{i}" for i in range(1, k + 1)]
    ys = ["y"] + [f"y{i}" for i in range(1, k + 1)]
    edges = list(zip(xs, ys)) + list(zip(xs, xs[1:])) + list(zip(ys, ys[1:]))
    return Graph(xs + ys, edges)


# -- Starjoin ----------------------------------------------------------------


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "_"
    taken.add(name)
    return name


def starjoin_parts(graphs: Sequence[Graph]) -> tuple[Graph, list[dict[str, str]], list[str], str]:
    """Starjoin plus naming details: ``(H, renames, join_vertices, root)``.

    Component names are kept when they are pairwise disjoint, otherwise every
    vertex of component ``i`` becomes ``"<i>.<name>"``.  ``renames[i]`` maps
    original names of component ``i`` to names in ``H``.
    """
    if not graphs:
        raise GraphError("starjoin needs at least one graph")
    all_names = [v for g in graphs for v in g.vertices]
    disjoint = len(set(all_names)) == len(all_names)
    renames = [
        {v: (v if disjoint else f"{i}.{v}") for v in g.vertices}
        for i, g in enumerate(graphs, start=1)
    ]
    taken = {v for r in renames for v in r.values()}
    joins = [_fresh(f"g{i}", taken) for i in range(1, len(graphs) + 1)]
    root = _fresh("r", taken)
    vertices = [r[v] for g, r in zip(graphs, renames) for v in g.vertices] + joins + [root]
    edges = []
    for g, r, gi in zip(graphs, renames, joins):
        edges.extend((r[u], r[w]) for u, w in g.edges())
        edges.extend((gi, r[v]) for v in g.vertices)
        edges.append((root, gi))
    return Graph(vertices, edges), renames, joins, root


def starjoin(graphs: Sequence[Graph]) -> Graph:
    """Give each graph a universal vertex ``g_i`` and join all ``g_i`` to a root ``r``."""
    return starjoin_parts(graphs)[0]


# -- two-chain family --------------------------------------------------------


def two_chain_tau(n: int) -> list[str]:
    # Index pairs (a_i, b_i): odd indices ascending, then even indices
    # descending, pair orientation alternating a-first / b-first.  The
    # hand-off pair is (b_n, a_n) for even n and (a_{n-1}, b_{n-1}) for odd n,
    # and the alternation continues from it.  The stepwise recipe this comes
    # from is not literal (it would repeat b_3 for n = 6); this reading
    # reproduces the reference n = 6 ordering exactly, and any output is
    # gated by the transitive-orientation check.
    odds = list(range(1, n + 1, 2))
    evens = list(range(n if n % 2 == 0 else n - 1, 1, -2))
    hand_off_a_first = n % 2 == 1
    tau = ["x"]
    for k, i in enumerate(odds):
        tau += [f"a{i}", f"b{i}"] if k % 2 == 0 else [f"b{i}", f"a{i}"]
    a_first = hand_off_a_first
    for i in evens:
        tau += [f"a{i}", f"b{i}"] if a_first else [f"b{i}", f"a{i}"]
        a_first = not a_first
    tau.append("y")
    return tau


def gen_two_chain(n: int) -> Fixture:
    """Comparability graph of two chains ``a1..an`` and ``x, y, b1..bn`` with ordering ``tau``.

    ``tau`` is a transitive orientation of the chains, hence a cocomparability
    ordering of the complement (the graph the sweeps actually run on).
    """
    if n < 2:
        raise GraphError("two-chain family needs n >= 2")
    from .checkers import validate_transitive_orientation

    a = [f"a{i}" for i in range(1, n + 1)]
    b = [f"b{i}" for i in range(1, n + 1)]
    edges = list(zip(a, a[1:])) + [("x", "y"), ("y", "b1")] + list(zip(b, b[1:]))
    graph = Graph(a + ["x", "y"] + b, edges)
    tau = Ordering(two_chain_tau(n))
    bad = validate_transitive_orientation(complement(graph), tau)
    if bad is not None:
        raise GraphError(f"two-chain tau construction is not transitive: {bad}")
    return Fixture(graph, {"tau": tau})


# -- seeded generators ---------------------------------------------------------


def _shuffled_names(rng: random.Random, names: list[str]) -> list[str]:
    out = names[:]
    rng.shuffle(out)
    return out


def _check_size(n: int, low: int = 1) -> None:
    if not isinstance(n, int) or n < low:
        raise GraphError(f"size must be an integer >= {low}, got {n!r}")


def _intersection_fixture(rng: random.Random, lefts: list[float], rights: list[float]) -> Fixture:
    n = len(lefts)
    names = [f"v{i}" for i in range(n)]
    edges = [
        (names[i], names[j])
        for i, j in combinations(range(n), 2)
        if lefts[i] <= rights[j] and lefts[j] <= rights[i]
    ]
    graph = Graph(_shuffled_names(rng, names), edges)
    witness = Ordering(names[i] for i in sorted(range(n), key=lambda i: (lefts[i], i)))
    return Fixture(graph, {"witness": witness})


def gen_unit_interval(n: int, seed: int) -> Fixture:
    """Intersection graph of ``n`` random unit intervals; ``witness`` = left-endpoint order (a PI-order)."""
    _check_size(n)
    rng = random.Random(seed)
    span = rng.uniform(1.0, max(2.0, n / 2))
    lefts = [rng.uniform(0, span) for _ in range(n)]
    return _intersection_fixture(rng, lefts, [x + 1.0 for x in lefts])


def gen_interval(n: int, seed: int) -> Fixture:
    """Intersection graph of ``n`` random intervals; ``witness`` = left-endpoint order (an I-order)."""
    _check_size(n)
    rng = random.Random(seed)
    span = rng.uniform(1.0, max(2.0, n / 2))
    mean_len = rng.uniform(0.2, 3.0)
    lefts = [rng.uniform(0, span) for _ in range(n)]
    rights = [x + rng.expovariate(1 / mean_len) for x in lefts]
    return _intersection_fixture(rng, lefts, rights)


def gen_permutation_graph(n: int, seed: int) -> Fixture:
    """Vertices ``1..n``; ``i < j`` adjacent iff a random permutation inverts them.

    The natural order ``1..n`` is a cocomparability ordering (``witness``).
    """
    _check_size(n)
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    names = [str(i) for i in range(1, n + 1)]
    edges = [(names[i], names[j]) for i, j in combinations(range(n), 2) if perm[i] > perm[j]]
    return Fixture(Graph(names, edges), {"witness": Ordering(names)})


def gen_cobipartite(p: int, q: int, density: float, seed: int) -> Fixture:
    """Cliques ``a1..ap`` and ``b1..bq``; each cross pair is an edge with probability ``density``.

    ``witness`` lists A then B, a cocomparability ordering.
    """
    _check_size(p)
    _check_size(q)
    if not 0.0 <= density <= 1.0:
        raise GraphError("density must lie in [0, 1]")
    rng = random.Random(seed)
    a = [f"a{i}" for i in range(1, p + 1)]
    b = [f"b{i}" for i in range(1, q + 1)]
    edges = list(combinations(a, 2)) + list(combinations(b, 2))
    edges += [(u, w) for u in a for w in b if rng.random() < density]
    graph = Graph(_shuffled_names(rng, a + b), edges)
    return Fixture(graph, {"witness": Ordering(a + b)})


def gen_cocomparability(n: int, density: float, seed: int) -> Fixture:
    """Complement of the comparability graph of a random poset; ``witness`` is a linear extension."""
    _check_size(n)
    if not 0.0 <= density <= 1.0:
        raise GraphError("density must lie in [0, 1]")
    rng = random.Random(seed)
    above = [set() for _ in range(n)]
    for i, j in combinations(range(n), 2):
        if rng.random() < density:
            above[i].add(j)
    for i in range(n - 1, -1, -1):  # transitive closure, top down
        for j in list(above[i]):
            above[i] |= above[j]
    names = [f"v{i}" for i in range(n)]
    edges = [(names[i], names[j]) for i, j in combinations(range(n), 2) if j not in above[i]]
    return Fixture(Graph(_shuffled_names(rng, names), edges), {"witness": Ordering(names)})


def gen_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree on ``v0..v{n-1}`` from a Prüfer sequence."""
    _check_size(n)
    names = [f"v{i}" for i in range(n)]
    if n == 1:
        return Graph(names)
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((names[leaf], names[x]))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((names[u], names[w]))
    return Graph(names, edges)


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) on ``v0..v{n-1}``."""
    _check_size(n)
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    return Graph(names, [(names[i], names[j]) for i, j in combinations(range(n), 2) if rng.random() < p])


def gen_planted_module(outside: int, inside: int, seed: int) -> tuple[Graph, frozenset[str]]:
    """Random graph with a module ``m0..m{inside-1}`` planted among ``r0..`` vertices."""
    _check_size(outside, 0)
    _check_size(inside)
    rng = random.Random(seed)
    mod = [f"m{i}" for i in range(inside)]
    rest = [f"r{i}" for i in range(outside)]
    p_in, p_out, p_cross = rng.random(), rng.random(), rng.random()
    edges = [e for e in combinations(mod, 2) if rng.random() < p_in]
    edges += [e for e in combinations(rest, 2) if rng.random() < p_out]
    for r in rest:
        if rng.random() < p_cross:
            edges += [(r, m) for m in mod]
    return Graph(_shuffled_names(rng, mod + rest), edges), frozenset(mod)
