"""``lexcycle`` command-line tool.

Exit codes: 0 success, 1 claim or check failed, 2 sweep/step budget
exhausted, 64 usage error, 65 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import campaigns, constructions
from .checkers import (
    check_cocomp_order,
    check_i_order,
    check_lexbfs_4pc,
    check_pi_order,
    validate_transitive_orientation,
)
from .cycles import detect_cycle, lexcycle, transitive_orientation
from .errors import BudgetExceeded, CapExceeded, GraphError, ParseError
from .graph import Graph, Ordering, complement
from .io import parse_graph, parse_ordering, serialize_graph, serialize_ordering
from .matrix import iterate_to_fixpoint, parse_matrix
from .sweep import SearchKind, first_sweep, sweep_sequence

EXIT_OK, EXIT_FAILED, EXIT_BUDGET, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 64, 65

CHECKS = {
    "pi": check_pi_order,
    "interval": check_i_order,
    "cocomp": check_cocomp_order,
    "lexbfs4pc": check_lexbfs_4pc,
    "transitive": validate_transitive_orientation,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Inputs:
    """Reads input files and keeps a digest of everything read."""

    def __init__(self):
        self._hash = hashlib.sha256()

    def text(self, path: str) -> str:
        try:
            data = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
        self._hash.update(path.encode() + b"\0" + data.encode() + b"\0")
        return data

    def graph(self, path: str) -> Graph:
        try:
            return parse_graph(self.text(path))
        except ParseError as exc:
            raise ParseError(f"{path}: {exc}") from None

    def ordering(self, path: str, graph: Graph) -> Ordering:
        try:
            return parse_ordering(self.text(path), graph)
        except ParseError as exc:
            raise ParseError(f"{path}: {exc}") from None

    def note(self, value: str) -> None:
        self._hash.update(value.encode() + b"\0")

    @property
    def digest(self) -> str:
        return self._hash.hexdigest()


def _orders(orders) -> list[list[str]]:
    return [list(o) for o in orders]


# -- subcommands ---------------------------------------------------------------
# each returns (exit code, json outputs, text lines)


def cmd_sweep(args, inp: _Inputs):
    if args.sweeps < 1:
        raise UsageError("--sweeps must be at least 1")
    g = inp.graph(args.graph)
    search = SearchKind.parse(args.search)
    if args.order:
        seed = inp.ordering(args.order, g)
        trace = sweep_sequence(search, g, seed, args.sweeps, engine=args.engine)
        orders = list(trace.orderings)
    else:
        first = first_sweep(search, g, engine=args.engine)
        orders = [first]
        if args.sweeps > 1:
            orders += sweep_sequence(search, g, first, args.sweeps - 1, engine=args.engine).orderings
    return EXIT_OK, {"search": search.value, "orderings": _orders(orders)}, [str(o) for o in orders]


def cmd_cycle(args, inp: _Inputs):
    g = inp.graph(args.graph)
    search = SearchKind.parse(args.search)
    if args.exhaustive:
        if search is not SearchKind.LEXBFS:
            raise UsageError("--exhaustive enumerates LexBFS seeds; use --search lexbfs")
        res = lexcycle(g, cap=args.cap, max_sweeps=args.budget)
        out = {
            "lexcycle": res.value,
            "exact": res.exact,
            "witness": list(res.witness) if res.witness is not None else None,
            "seeds_tried": res.seeds_tried,
        }
        kind = "exact" if res.exact else "lower bound"
        lines = [f"lexcycle {res.value} ({kind}, {res.seeds_tried} seeds)"]
        if res.witness is not None:
            lines.append(f"witness {res.witness}")
        return EXIT_OK, out, lines
    seed = inp.ordering(args.order, g) if args.order else first_sweep(search, g)
    rep = detect_cycle(search, g, seed, args.budget)
    lines = [
        f"tail {rep.tail}",
        f"cycle_length {rep.cycle_length}",
        f"total_sweeps {rep.total_sweeps}",
    ] + [f"cycle[{i}] {o}" for i, o in enumerate(rep.cycle)]
    return EXIT_OK, {"search": search.value, "seed": list(seed), **rep.to_dict()}, lines


def cmd_check(args, inp: _Inputs):
    g = inp.graph(args.graph)
    order = inp.ordering(args.order, g)
    bad = CHECKS[args.property](g, order)
    if bad is None:
        return EXIT_OK, {"property": args.property, "ok": True, "violation": None}, [f"{args.property}: ok"]
    out = {"property": args.property, "ok": False, "violation": {"kind": bad.kind, "witness": list(bad.witness)}}
    return EXIT_FAILED, out, [f"{args.property}: violation {bad}"]


def cmd_repro(args, inp: _Inputs):
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    inp.note(f"{args.name}:{args.trials}:{args.seed}")
    res = campaigns.run_target(args.name, args.trials, args.seed, args.jobs)
    lines = [f"{res.name}: {'PASS' if res.passed else 'FAIL'} ({res.trials} trial{'s' * (res.trials != 1)})", f"  claim: {res.claim}"]
    lines += [f"  {d}" for d in res.details]
    lines += [f"  FAILURE {f}" for f in res.failures]
    out = res.to_dict()
    out.pop("seconds")
    return (EXIT_OK if res.passed else EXIT_FAILED), out, lines


def _gen_graph(spec: str, inp: _Inputs) -> tuple[Graph, Ordering | None]:
    name, *params = spec.split(":")

    def ints(count: int) -> list[int]:
        if len(params) != count:
            raise UsageError(f"{name} takes {count} parameter(s)")
        try:
            return [int(p) for p in params]
        except ValueError:
            raise UsageError(f"bad integer parameter in {spec!r}") from None

    try:
        if name in ("g3", "g4", "lexdfs"):
            ints(0)
            fx = {"g3": constructions.fixture_g3, "g4": constructions.fixture_g4, "lexdfs": constructions.fixture_lexdfs_example}[name]()
            return fx.graph, None
        if name == "domino":
            ints(0)
            return constructions.gen_domino(), None
        if name == "ladder":
            return constructions.gen_ladder(*ints(1)), None
        if name == "twochain":
            fx = constructions.gen_two_chain(*ints(1))
            return fx.graph, fx["tau"]
        if name == "starjoin":
            if len(params) != 1 or not params[0]:
                raise UsageError("starjoin takes a comma-separated list of graph files")
            return constructions.starjoin([inp.graph(p) for p in params[0].split(",")]), None
        if name == "unitinterval":
            fx = constructions.gen_unit_interval(*ints(2))
        elif name == "interval":
            fx = constructions.gen_interval(*ints(2))
        elif name == "permutation":
            fx = constructions.gen_permutation_graph(*ints(2))
        elif name == "tree":
            return constructions.gen_tree(*ints(2)), None
        elif name in ("cobipartite", "cocomp", "gnp"):
            want = 4 if name == "cobipartite" else 3
            if len(params) != want:
                raise UsageError(f"{name} takes {want} parameters")
            try:
                nums = [int(p) for p in params[:-2]] + [float(params[-2]), int(params[-1])]
            except ValueError:
                raise UsageError(f"bad parameter in {spec!r}") from None
            if name == "cobipartite":
                fx = constructions.gen_cobipartite(*nums)
            elif name == "cocomp":
                fx = constructions.gen_cocomparability(*nums)
            else:
                return constructions.gen_gnp(*nums), None
        else:
            raise UsageError(f"unknown generator {name!r}")
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    return fx.graph, fx["witness"]


def cmd_gen(args, inp: _Inputs):
    inp.note(args.spec)
    g, witness = _gen_graph(args.spec, inp)
    if args.complement:
        g = complement(g)
    if args.witness:
        if witness is None:
            raise UsageError(f"{args.spec.split(':')[0]} has no witness ordering")
        Path(args.witness).write_text(serialize_ordering(witness), encoding="utf-8")
    text = serialize_graph(g)
    out = {"spec": args.spec, "graph": text, "witness": list(witness) if witness is not None else None}
    return EXIT_OK, out, text.splitlines()


def cmd_orient(args, inp: _Inputs):
    g = inp.graph(args.graph)
    seed = inp.ordering(args.order, g) if args.order else None
    res = transitive_orientation(g, args.budget, seed)
    bad = validate_transitive_orientation(g, res.ordering)
    out = {
        "ordering": list(res.ordering),
        "stop_index": res.stop_index,
        "sweeps_used": res.sweeps_used,
        "trace": _orders(res.trace),
        "valid": bad is None,
        "violation": None if bad is None else {"kind": bad.kind, "witness": list(bad.witness)},
    }
    lines = [
        str(res.ordering),
        f"stopped at sigma{res.stop_index} = sigma{res.stop_index - 2}",
        "valid transitive orientation" if bad is None else f"not a transitive orientation: {bad}",
    ]
    return (EXIT_OK if bad is None else EXIT_FAILED), out, lines


def cmd_matrix(args, inp: _Inputs):
    m = parse_matrix(inp.text(args.matrix))
    rep = iterate_to_fixpoint(m, args.max_steps)
    ok = rep.final.rows_sorted() and rep.final.cols_sorted()
    lines = [f"steps {rep.steps}", *str(rep.final).splitlines(), "sorted both ways" if ok else "NOT sorted"]
    out = rep.to_dict()
    out["sorted"] = ok
    return (EXIT_OK if ok else EXIT_FAILED), out, lines


# -- driver ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lexcycle", description="Multi-sweep lexicographic graph searches.")
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    searches = [k.value + suffix for k in SearchKind for suffix in ("", "+")]

    p = sub.add_parser("sweep", parents=[fmt], help="run iterated + sweeps and print each ordering")
    p.add_argument("--graph", required=True)
    p.add_argument("--search", default="lexbfs", choices=searches)
    seed = p.add_mutually_exclusive_group(required=True)
    seed.add_argument("--order", help="seed ordering file")
    seed.add_argument("--default-seed", action="store_true", help="start with a plain search in input order")
    p.add_argument("--sweeps", type=int, default=1)
    p.add_argument("--engine", choices=("fast", "naive"), default="fast")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("cycle", parents=[fmt], help="detect the cycle of iterated + sweeps")
    p.add_argument("--graph", required=True)
    p.add_argument("--search", default="lexbfs", choices=searches)
    seed = p.add_mutually_exclusive_group()
    seed.add_argument("--order", help="seed ordering file (default: a plain search in input order)")
    seed.add_argument("--exhaustive", action="store_true", help="maximise over every LexBFS seed")
    p.add_argument("--budget", type=int, default=None, help="max sweeps per seed")
    p.add_argument("--cap", type=int, default=1_000_000, help="max seeds for --exhaustive")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("check", parents=[fmt], help="check an ordering against a characterisation")
    p.add_argument("--graph", required=True)
    p.add_argument("--order", required=True)
    p.add_argument("--property", required=True, choices=sorted(CHECKS))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("repro", parents=[fmt], help="reproduce a worked example or run a property campaign")
    p.add_argument("name", choices=campaigns.TARGETS)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_repro)

    p = sub.add_parser("gen", parents=[fmt], help="write a named or generated graph to stdout")
    p.add_argument("spec", help="g3 | g4 | lexdfs | domino | ladder:K | twochain:N | starjoin:F1,F2 | "
                   "unitinterval:N:SEED | interval:N:SEED | permutation:N:SEED | cobipartite:P:Q:D:SEED | "
                   "cocomp:N:D:SEED | gnp:N:P:SEED | tree:N:SEED")
    p.add_argument("--complement", action="store_true", help="emit the complement graph")
    p.add_argument("--witness", help="also write the generator's witness ordering to this file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("orient", parents=[fmt], help="sweep until period two and validate the orientation")
    p.add_argument("--graph", required=True)
    p.add_argument("--order", help="seed ordering (default: a plain LexBFS in input order)")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("matrix", parents=[fmt], help="iterate row/column sorts of a 0/1 matrix to its fixpoint")
    p.add_argument("matrix")
    p.add_argument("--max-steps", type=int, default=None)
    p.set_defaults(func=cmd_matrix)
    return parser


def _emit(args, argv, inp, code, outputs, lines, started, error=None) -> None:
    if args.format == "json":
        report = {
            "command": args.command,
            "argv": list(argv),
            "inputs_digest": inp.digest,
            "exit_code": code,
            "passed": code == EXIT_OK,
            "outputs": outputs,
            "error": error,
            "wall_time": round(time.perf_counter() - started, 6),
        }
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)
        if error:
            print(f"lexcycle: {error}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(argv)
    inp = _Inputs()
    started = time.perf_counter()
    try:
        code, outputs, lines = args.func(args, inp)
        _emit(args, argv, inp, code, outputs, lines, started)
        return code
    except UsageError as exc:
        _emit(args, argv, inp, EXIT_USAGE, None, [], started, f"usage: {exc}")
        return EXIT_USAGE
    except ParseError as exc:
        _emit(args, argv, inp, EXIT_PARSE, None, [], started, f"parse error: {exc}")
        return EXIT_PARSE
    except BudgetExceeded as exc:
        trace = [list(o) for o in exc.trace]
        if args.format == "json":
            _emit(args, argv, inp, EXIT_BUDGET, {"trace": trace}, [], started, str(exc))
        else:
            for o in exc.trace:
                print(o)
            print(f"lexcycle: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CapExceeded as exc:
        _emit(args, argv, inp, EXIT_BUDGET, {"lower_bound": exc.lower_bound}, [], started, str(exc))
        return EXIT_BUDGET
    except (GraphError, ValueError) as exc:
        _emit(args, argv, inp, EXIT_USAGE, None, [], started, str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
