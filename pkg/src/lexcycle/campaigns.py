"""Reproduction targets: the worked examples as exact checks, the general claims as seeded campaigns.

Every target returns a :class:`ReproResult`.  Campaign trials get their
seeds drawn up front from ``random.Random(seed)``, so the aggregate does not
depend on how many worker processes run them.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .checkers import (
    asteroidal_number,
    check_cocomp_order,
    check_lexbfs_4pc,
    check_pi_order,
    clique_split,
    find_induced_domino,
    flipping_check,
    validate_transitive_orientation,
)
from .constructions import (
    fixture_g3,
    fixture_g4,
    fixture_lexdfs_example,
    g6_trace,
    gen_cobipartite,
    gen_cocomparability,
    gen_gnp,
    gen_interval,
    gen_permutation_graph,
    gen_planted_module,
    gen_tree,
    gen_two_chain,
    gen_unit_interval,
)
from .cycles import detect_cycle, starjoin_cycle_check, transitive_orientation
from .graph import (
    Graph,
    ModularPartition,
    Ordering,
    block_order,
    complement,
    diameter,
    distance,
    first_difference,
    induced_subgraph,
    quotient_graph,
)
from .matrix import cobipartite_matrix, iterate_to_fixpoint, potential_vector, sort_rows_lex
from .sweep import SearchKind, plus_sweep, sweep_sequence


@dataclass
class ReproResult:
    name: str
    claim: str
    trials: int
    failures: list[str] = field(default_factory=list)
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "passed": self.passed,
            "trials": self.trials,
            "failures": self.failures,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


def _diff(label: str, expected: Ordering, got: Ordering) -> str | None:
    if expected == got:
        return None
    at = first_difference(expected, got)
    return f"{label}: expected {expected} but got {got} (first difference at position {at})"


def _random_order(rng: random.Random, graph: Graph) -> Ordering:
    names = list(graph.vertices)
    rng.shuffle(names)
    return Ordering(names)


# -- exact examples -----------------------------------------------------------


def _fixture_cycle(fx, labels: list[str], lam: int, search: SearchKind, res: ReproResult) -> None:
    trace = sweep_sequence(search, fx.graph, fx[labels[0]], len(labels))
    expected = labels[1:] + labels[:1]
    for got, label in zip(trace.orderings, expected):
        res.details.append(f"{label}: {got}")
        if msg := _diff(label, fx[label], got):
            res.failures.append(msg)
    rep = detect_cycle(search, fx.graph, fx[labels[0]])
    res.details.append(f"cycle length {rep.cycle_length}, tail {rep.tail}")
    if rep.cycle_length != lam:
        res.failures.append(f"expected cycle length {lam}, got {rep.cycle_length}")


def repro_figure1() -> ReproResult:
    res = ReproResult("figure1", "LexBFS+ on the nine-vertex example cycles with period 3", 1)
    _fixture_cycle(fixture_g3(), ["sigma1", "sigma2", "sigma3"], 3, SearchKind.LEXBFS, res)
    return res


def repro_figure2() -> ReproResult:
    res = ReproResult("figure2", "LexBFS+ on the twelve-vertex example cycles with period 4", 1)
    _fixture_cycle(fixture_g4(), ["mu1", "mu2", "mu3", "mu4"], 4, SearchKind.LEXBFS, res)
    return res


def repro_corollary1() -> ReproResult:
    res = ReproResult("corollary1", "Starjoin of the period-3 and period-4 examples: cycle length a multiple of 12, above its asteroidal number", 1)
    g3, g4 = fixture_g3(), fixture_g4()
    check = starjoin_cycle_check([(g3.graph, g3["sigma1"]), (g4.graph, g4["mu1"])])
    an = asteroidal_number(check.graph)
    parts = [asteroidal_number(g3.graph), asteroidal_number(g4.graph)]
    res.details += [
        f"vertices {check.graph.n}, edges {check.graph.m}",
        f"seed {check.seed}",
        f"asteroidal numbers: components {parts}, joined graph {an}",
        f"component cycle lengths {list(check.component_lengths)}, joined cycle length {check.cycle_length}",
    ]
    # an asteroidal set of the join lies inside one component or takes at
    # most one vertex per component, so an(H) = max(k, max an(G_i)) here
    if an != max(2, *parts):
        res.failures.append(f"asteroidal number {an}, expected max(k, component values) = {max(2, *parts)}")
    if not check.divisible:
        res.failures.append(f"cycle length {check.cycle_length} is not a multiple of {check.required_multiple}")
    if check.cycle_length <= an:
        res.failures.append(f"cycle length {check.cycle_length} does not exceed an = {an}")
    return res


def repro_g6() -> ReproResult:
    res = ReproResult("g6", "two-chain complement from tau: eight sweeps with sigma8 = sigma6", 1)
    fx = gen_two_chain(6)
    cocomp = complement(fx.graph)
    tau = fx["tau"]
    res.details.append(f"tau: {tau}")
    if (bad := validate_transitive_orientation(cocomp, tau)) is not None:
        res.failures.append(f"tau is not a transitive orientation: {bad}")
    expected = g6_trace()
    trace = sweep_sequence(SearchKind.LEXBFS, cocomp, tau, 8)
    for i, (want, got) in enumerate(zip(expected, trace.orderings), start=1):
        res.details.append(f"sigma{i}: {got}")
        if msg := _diff(f"sigma{i}", want, got):
            res.failures.append(msg)
    if trace[7] != trace[5]:
        res.failures.append("sigma8 differs from sigma6")
    if trace[6] == trace[4]:
        res.failures.append("sigma7 already equals sigma5; the loop would stop early")
    orient = transitive_orientation(cocomp, seed=tau)
    res.details.append(f"orientation loop stops at sigma{orient.stop_index}")
    if orient.stop_index != 8:
        res.failures.append(f"expected the orientation loop to stop at sigma8, got sigma{orient.stop_index}")
    return res


def repro_lexdfs() -> ReproResult:
    res = ReproResult("lexdfs", "LexDFS+ cycles with period 4 through orderings that are not cocomparability orders", 1)
    fx = fixture_lexdfs_example()
    _fixture_cycle(fx, ["sigma1", "sigma2", "sigma3", "sigma4"], 4, SearchKind.LEXDFS, res)
    rep = detect_cycle(SearchKind.LEXDFS, fx.graph, fx["sigma1"])
    for o in rep.cycle:
        if check_cocomp_order(fx.graph, o) is None:
            res.failures.append(f"cycle ordering {o} is a cocomparability order")
    if (bad := check_cocomp_order(fx.graph, fx["tau"])) is not None:
        res.failures.append(f"tau fails the cocomparability check: {bad}")
    return res


# -- campaigns ----------------------------------------------------------------


def _trial_properinterval(seed: int) -> str | None:
    rng = random.Random(seed)
    fx = gen_unit_interval(rng.randint(6, 40), seed)
    g, w = fx.graph, fx["witness"]
    if (bad := check_pi_order(g, w)) is not None:
        return f"generator witness is not a PI-order: {bad}"
    if (msg := _diff("sweep of a PI-order", w.dual(), plus_sweep(SearchKind.LEXBFS, g, w))) is not None:
        return msg
    orient = transitive_orientation(g)
    s = orient.trace
    if (bad := check_pi_order(g, s[2])) is not None:
        return f"third sweep is not a PI-order: {bad}"
    if orient.stop_index > 5:
        return f"orientation loop stopped at sigma{orient.stop_index}, expected by sigma5"
    s5 = sweep_sequence(SearchKind.LEXBFS, g, s[0], 4).last
    return _diff("sigma5 vs sigma3", s[2], s5)


def _trial_interval(seed: int) -> str | None:
    rng = random.Random(seed)
    fx = gen_interval(rng.randint(6, 40), seed)
    g, w = fx.graph, fx["witness"]
    if (bad := check_cocomp_order(g, w)) is not None:
        return f"generator witness is not a cocomparability order: {bad}"
    tr = sweep_sequence(SearchKind.LEXBFS, g, w, 3)
    return _diff("sigma3 vs sigma1", tr[0], tr[2])


def _trial_cobipartite(seed: int) -> str | None:
    rng = random.Random(seed)
    n = rng.randint(6, 40)
    p = rng.randint(1, n - 1)
    fx = gen_cobipartite(p, n - p, rng.random(), seed)
    g = fx.graph
    seq = [plus_sweep(SearchKind.LEXBFS, g, fx["witness"])]
    while len(seq) < 3 or seq[-1] != seq[-3]:
        if len(seq) >= n * n:
            return f"no 2-cycle within {n * n} sweeps"
        seq.append(plus_sweep(SearchKind.LEXBFS, g, seq[-1]))
    for i, s in enumerate(seq):
        if (bad := check_cocomp_order(g, s)) is not None:
            return f"sweep {i + 1} is not a cocomparability order: {bad}"
        if not clique_split(g, s).suffix_is_clique:
            return f"sweep {i + 1} does not split into two cliques"
    rep = detect_cycle(SearchKind.LEXBFS, g, seq[0])
    if rep.cycle_length != 2:
        return f"cycle length {rep.cycle_length}, expected 2"
    if rep.total_sweeps >= n * n:
        return f"{rep.total_sweeps} sweeps used, not below n^2 = {n * n}"
    if clique_split(g, seq[0]).index == n:
        return None  # complete graph: one side is empty, no matrix
    mat, a, b = cobipartite_matrix(g, seq[0])
    if not mat.cols_sorted():
        return "columns of the first matrix are not sorted"
    sides = (a, b)
    for t in range(1, len(seq)):
        nxt, a2, b2 = cobipartite_matrix(g, seq[t], first_side=sides[1])
        if nxt != sort_rows_lex(mat).transpose():
            return f"sweep {t + 1} matrix is not the sorted previous matrix"
        # same matrices in a fixed frame: rows always the first side
        before = mat if t % 2 == 1 else mat.transpose()
        after = nxt.transpose() if t % 2 == 1 else nxt
        if potential_vector(after) > potential_vector(before):
            return f"potential increased at sweep {t + 1}"
        mat, sides = nxt, (a2, b2)
    fix = iterate_to_fixpoint(cobipartite_matrix(g, seq[0])[0])
    if any(x < y for x, y in zip(fix.potential_trace, fix.potential_trace[1:])):
        return "fixpoint potential increased"
    if not (fix.final.rows_sorted() and fix.final.cols_sorted()):
        return "fixpoint matrix is not sorted both ways"
    return None


def _dominofree_instance(seed: int) -> tuple[Graph, Ordering] | None:
    rng = random.Random(seed)
    n = rng.randint(6, 40)
    fx = gen_permutation_graph(n, seed) if rng.random() < 0.5 else gen_interval(n, seed)
    if find_induced_domino(fx.graph) is not None:
        return None
    return fx.graph, fx["witness"]


def _trial_dominofree(seed: int) -> str | None:
    inst = _dominofree_instance(seed)
    if inst is None:
        return None
    g, w = inst
    rep = detect_cycle(SearchKind.LEXBFS, g, w)
    if rep.cycle_length != 2:
        return f"cycle length {rep.cycle_length}, expected 2"
    return None


def _trial_trees(seed: int) -> tuple[str | None, tuple[str, ...]]:
    # sigma_4 = sigma_2 is not guaranteed: the first sweep may order the
    # children of a path vertex in a way the second sweep still inherits.
    # The period-two alternation is checked from sigma_3 on.
    rng = random.Random(seed)
    g = gen_tree(rng.randint(6, 60), seed)
    start = _random_order(rng, g)
    tags = []
    traces = {}
    for search in (SearchKind.BFS, SearchKind.LEXBFS):
        tr = sweep_sequence(search, g, start, 5)
        traces[search] = tr.orderings
        if tr[1] == tr[3]:
            tags.append(f"{search.value}: sigma4 = sigma2")
        if (msg := _diff(f"{search.value} sigma5 vs sigma3", tr[2], tr[4])) is not None:
            return msg, ()
        x, y = tr[0][-1], tr[1][-1]
        if distance(g, x, y) != diameter(g):
            return f"{search.value}: distance({x}, {y}) = {distance(g, x, y)} but diameter is {diameter(g)}", ()
    if traces[SearchKind.BFS] != traces[SearchKind.LEXBFS]:
        return "BFS+ and LexBFS+ disagree on a tree", ()
    return None, tuple(tags)


def _trial_flipping(seed: int) -> str | None:
    rng = random.Random(seed)
    n = rng.randint(6, 40)
    if rng.random() < 0.5:
        fx = gen_cocomparability(n, rng.random(), seed)
    else:
        fx = gen_permutation_graph(n, seed)
    g, w = fx.graph, fx["witness"]
    tau = plus_sweep(SearchKind.LEXBFS, g, w)
    if (pair := flipping_check(g, w, tau)) is not None:
        return f"non-adjacent pair {pair} keeps its order"
    rep = detect_cycle(SearchKind.LEXBFS, g, w)
    if rep.cycle_length % 2:
        return f"odd cycle length {rep.cycle_length}"
    return None


def _trial_modules(seed: int) -> str | None:
    rng = random.Random(seed)
    inside = rng.randint(2, 8)
    g, mod = gen_planted_module(rng.randint(2, 20), inside, seed)
    theta = _random_order(rng, g)
    sigma = plus_sweep(SearchKind.LEXBFS, g, theta)
    sub = induced_subgraph(g, mod)
    if (msg := _diff("module projection", plus_sweep(SearchKind.LEXBFS, sub, theta.restrict(mod)), sigma.restrict(mod))) is not None:
        return msg
    part = ModularPartition(g, [mod] + [[v] for v in g.vertices if v not in mod])
    quotient = quotient_graph(g, part)
    want = plus_sweep(SearchKind.LEXBFS, quotient, block_order(theta, part, by="last"))
    return _diff("quotient discovery order", want, block_order(sigma, part, by="first"))


def _trial_engines(seed: int) -> str | None:
    rng = random.Random(seed)
    n = rng.randint(1, 30)
    g = gen_gnp(n, rng.random(), seed)
    sigma = _random_order(rng, g)
    for search in SearchKind:
        fast = plus_sweep(search, g, sigma, engine="fast")
        naive = plus_sweep(search, g, sigma, engine="naive")
        if (msg := _diff(f"{search.value} fast vs naive", naive, fast)) is not None:
            return msg
        if search is SearchKind.LEXBFS and (bad := check_lexbfs_4pc(g, fast)) is not None:
            return f"LexBFS output fails the 4-point condition: {bad}"
    return None


@dataclass(frozen=True)
class Campaign:
    claim: str
    trial: Callable[[int], str | None | tuple[str | None, tuple[str, ...]]]
    default_trials: int = 200


CAMPAIGNS: dict[str, Campaign] = {
    "properinterval": Campaign("unit interval: a PI-order sweeps to its dual; orientation stops by sigma5 = sigma3", _trial_properinterval),
    "interval": Campaign("interval: from a cocomparability seed, sigma1 = sigma3", _trial_interval),
    "cobipartite": Campaign("cobipartite: two-clique splits, 2-cycle under n^2 sweeps, sweeps act as matrix sorts", _trial_cobipartite),
    "dominofree": Campaign("domino-free cocomparability: cycle length 2 from a cocomparability seed", _trial_dominofree),
    "trees": Campaign("trees: sigma5 = sigma3 under BFS+ and LexBFS+ (sigma4 = sigma2 is tallied); last vertices span a diameter", _trial_trees),
    "flipping": Campaign("cocomparability: a sweep reverses every non-adjacent pair; cycle lengths are even", _trial_flipping, 500),
    "modules": Campaign("modules: sweeps project onto a module and onto the quotient", _trial_modules),
    "engines": Campaign("fast and naive engines agree; LexBFS outputs satisfy the 4-point condition", _trial_engines, 1000),
}

EXAMPLES: dict[str, Callable[[], ReproResult]] = {
    "figure1": repro_figure1,
    "figure2": repro_figure2,
    "corollary1": repro_corollary1,
    "g6": repro_g6,
    "lexdfs": repro_lexdfs,
}

TARGETS = tuple(EXAMPLES) + tuple(CAMPAIGNS)


def _run_trial(args: tuple[str, int, int]) -> tuple[int, int, str | None, tuple[str, ...]]:
    name, index, seed = args
    try:
        out = CAMPAIGNS[name].trial(seed)
    except Exception as exc:  # report, keep the campaign going
        return index, seed, f"{type(exc).__name__}: {exc}", ()
    if isinstance(out, tuple):
        return index, seed, out[0], out[1]
    return index, seed, out, ()


def run_campaign(name: str, trials: int | None = None, seed: int = 0, jobs: int = 1) -> ReproResult:
    camp = CAMPAIGNS[name]
    trials = camp.default_trials if trials is None else trials
    if trials < 1:
        raise ValueError("trials must be at least 1")
    master = random.Random(seed)
    work = [(name, i, master.getrandbits(63)) for i in range(trials)]
    if name == "dominofree":
        work = _dominofree_work(trials, master)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_trial, work, chunksize=max(1, trials // (4 * jobs))))
    else:
        outcomes = [_run_trial(w) for w in work]
    res = ReproResult(name, camp.claim, trials)
    tally: Counter[str] = Counter()
    for index, trial_seed, msg, tags in sorted(outcomes):
        tally.update(tags)
        if msg is not None:
            res.failures.append(f"trial {index} (seed {trial_seed}): {msg}")
    res.details += [f"{tag}: {count}/{trials} trials" for tag, count in sorted(tally.items())]
    return res


def _dominofree_work(trials: int, master: random.Random) -> list[tuple[str, int, int]]:
    # the filter discards instances with an induced domino; keep drawing
    # until enough survive so every trial is a real instance
    work, attempts = [], 0
    while len(work) < trials:
        attempts += 1
        if attempts > 50 * trials:
            raise RuntimeError("domino-free filter rejected too many instances")
        s = master.getrandbits(63)
        if _dominofree_instance(s) is not None:
            work.append(("dominofree", len(work), s))
    return work


def run_target(name: str, trials: int | None = None, seed: int = 0, jobs: int = 1) -> ReproResult:
    start = time.perf_counter()
    if name in EXAMPLES:
        res = EXAMPLES[name]()
    elif name in CAMPAIGNS:
        res = run_campaign(name, trials, seed, jobs)
    else:
        raise KeyError(f"unknown target {name!r}; choose from {', '.join(TARGETS)}")
    res.seconds = time.perf_counter() - start
    return res
