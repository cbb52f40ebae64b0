"""Cycle detection over iterated sweeps, the LexCycle value, and orientation by repeated sweeps."""

from __future__ import annotations

import math
import os
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import BudgetExceeded, CapExceeded, GraphError
from .graph import Graph, Ordering, first_difference
from .sweep import SearchKind, enumerate_lexbfs_orderings, first_sweep, plus_sweep

MAX_SWEEPS_ENV = "LEXCYCLE_MAX_SWEEPS"


def default_max_sweeps(n: int) -> int:
    env = os.environ.get(MAX_SWEEPS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{MAX_SWEEPS_ENV} must be an integer, got {env!r}") from None
        if value < 2:
            raise ValueError(f"{MAX_SWEEPS_ENV} must be at least 2")
        return value
    return max(4 * n + 8, 64)


@dataclass(frozen=True)
class CycleReport:
    """Where an iterated sweep sequence becomes periodic.

    The seed counts as step 0, so ``tail`` is the number of orderings seen
    before the first one that recurs and ``cycle[0]`` is that ordering.
    """

    tail: int
    cycle_length: int
    cycle: tuple[Ordering, ...]
    total_sweeps: int

    def to_dict(self) -> dict:
        return {
            "tail": self.tail,
            "cycle_length": self.cycle_length,
            "cycle": [list(o) for o in self.cycle],
            "total_sweeps": self.total_sweeps,
        }


def detect_cycle(
    search: SearchKind | str,
    graph: Graph,
    seed: Ordering,
    max_sweeps: int | None = None,
    *,
    engine: str = "fast",
) -> CycleReport:
    """Sweep from ``seed`` until an ordering repeats.

    Raises :class:`BudgetExceeded` (carrying every ordering computed) if no
    repeat shows up within ``max_sweeps`` sweeps.
    """
    search = SearchKind.parse(search)
    seed.indices(graph)
    if max_sweeps is None:
        max_sweeps = default_max_sweeps(graph.n)
    if max_sweeps < 2:
        raise ValueError("max_sweeps must be at least 2")
    seen = {seed: 0}
    trace = [seed]
    cur = seed
    for step in range(1, max_sweeps + 1):
        cur = plus_sweep(search, graph, cur, engine=engine)
        first = seen.get(cur)
        if first is not None:
            return CycleReport(first, step - first, tuple(trace[first:]), step)
        seen[cur] = step
        trace.append(cur)
    raise BudgetExceeded(f"no repeated ordering within {max_sweeps} sweeps", trace)


@dataclass(frozen=True)
class LexCycleResult:
    value: int
    witness: Ordering | None
    exact: bool
    seeds_tried: int


def lexcycle(graph: Graph, cap: int | None = 1_000_000, max_sweeps: int | None = None) -> LexCycleResult:
    """Longest LexBFS+ cycle reachable from any LexBFS ordering.

    Every seed's first sweep already lands on a LexBFS ordering, so trying
    all of them as seeds covers all sequences.  If the enumeration hits
    ``cap`` the value is a lower bound and ``exact`` is False.  The witness is
    the first maximising seed in enumeration order.
    """
    if graph.n == 0:
        return LexCycleResult(0, None, True, 0)
    known: dict[Ordering, int] = {}
    best, witness, tried, exact = 0, None, 0, True
    seeds = enumerate_lexbfs_orderings(graph, cap)
    try:
        for seed in seeds:
            tried += 1
            lam = known.get(seed)
            if lam is None:
                rep = detect_cycle(SearchKind.LEXBFS, graph, seed, max_sweeps)
                lam = rep.cycle_length
                for o in rep.cycle:
                    known[o] = lam
            if lam > best:
                best, witness = lam, seed
    except CapExceeded:
        exact = False
    return LexCycleResult(best, witness, exact, tried)


@dataclass(frozen=True)
class OrientationResult:
    """Outcome of sweeping until an ordering equals the one two sweeps earlier.

    ``trace[i - 1]`` is sigma_i; the loop stopped at ``stop_index`` because
    sigma_stop == sigma_(stop-2).
    """

    ordering: Ordering
    stop_index: int
    trace: tuple[Ordering, ...]

    @property
    def sweeps_used(self) -> int:
        return len(self.trace)


def transitive_orientation(
    graph: Graph, budget: int | None = None, seed: Ordering | None = None
) -> OrientationResult:
    """Candidate cocomparability ordering by LexBFS+ sweeps until period two.

    sigma_1 is a plain LexBFS (ties by input order) or, if ``seed`` is given,
    the + sweep of ``seed``.  It is an open question whether the loop always
    terminates on cocomparability graphs, so running out of ``budget`` sweeps
    raises :class:`BudgetExceeded` with the trace.  The caller validates the
    returned ordering.
    """
    if budget is None:
        budget = default_max_sweeps(graph.n)
    if budget < 3:
        raise ValueError("budget must allow at least 3 sweeps")
    if seed is None:
        trace = [first_sweep(SearchKind.LEXBFS, graph)]
    else:
        trace = [plus_sweep(SearchKind.LEXBFS, graph, seed)]
    while len(trace) < 3:
        trace.append(plus_sweep(SearchKind.LEXBFS, graph, trace[-1]))
    while trace[-1] != trace[-3]:
        if len(trace) >= budget:
            raise BudgetExceeded(f"no period-two repeat within {budget} sweeps", trace)
        trace.append(plus_sweep(SearchKind.LEXBFS, graph, trace[-1]))
    return OrientationResult(trace[-1], len(trace), tuple(trace))


@dataclass(frozen=True)
class StarjoinCycle:
    graph: Graph
    seed: Ordering
    component_lengths: tuple[int, ...]
    report: CycleReport

    @property
    def cycle_length(self) -> int:
        return self.report.cycle_length

    @property
    def required_multiple(self) -> int:
        return math.lcm(*self.component_lengths)

    @property
    def divisible(self) -> bool:
        return self.cycle_length % self.required_multiple == 0


def starjoin_cycle_check(
    components: Sequence[tuple[Graph, Ordering]], max_sweeps: int | None = None
) -> StarjoinCycle:
    """Sweep the Starjoin of the components from ``r, g_1..g_k`` then every component seed.

    Each component's own cycle length is measured first; the joined graph's
    cycle length should be a multiple of their lcm.
    """
    from .constructions import starjoin_parts

    if not components:
        raise GraphError("starjoin_cycle_check needs at least one component")
    lengths = tuple(detect_cycle(SearchKind.LEXBFS, g, s, max_sweeps).cycle_length for g, s in components)
    joined, renames, joins, root = starjoin_parts([g for g, _ in components])
    seq = [root, *joins]
    for (_, s), ren in zip(components, renames):
        seq.extend(ren[v] for v in s)
    seed = Ordering(seq)
    budget = max_sweeps if max_sweeps is not None else max(default_max_sweeps(joined.n), 4 * math.lcm(*lengths) + 8)
    report = detect_cycle(SearchKind.LEXBFS, joined, seed, budget)
    return StarjoinCycle(joined, seed, lengths, report)


def diff_profile(orderings: Sequence[Ordering], gap: int = 2) -> list[int | None]:
    """First differing position (1-based) between each ordering and the one ``gap`` later.

    On a sequence heading into a 2-cycle the values tend to grow; ``None``
    marks a pair that already agrees.
    """
    return [first_difference(orderings[i], orderings[i + gap]) for i in range(len(orderings) - gap)]
