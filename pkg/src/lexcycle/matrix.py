"""0/1 matrices under alternating lexicographic row and column sorts.

Rows are packed into Python ints with column 0 as the most significant bit,
so comparing two rows lexicographically is a single integer comparison.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .checkers import clique_split
from .errors import BudgetExceeded, GraphError, ParseError
from .graph import Graph, Ordering


class BinaryMatrix:
    __slots__ = ("p", "q", "_rows")

    def __init__(self, rows: Iterable[Sequence[int]]):
        data = [tuple(int(x) for x in r) for r in rows]
        if not data or not data[0]:
            raise GraphError("matrix dimensions must be positive")
        q = len(data[0])
        packed = []
        for i, r in enumerate(data):
            if len(r) != q:
                raise GraphError(f"row {i} has {len(r)} entries, expected {q}")
            if any(x not in (0, 1) for x in r):
                raise GraphError(f"row {i} has a non-binary entry")
            packed.append(int("".join(map(str, r)), 2))
        self.p, self.q, self._rows = len(data), q, tuple(packed)

    @classmethod
    def _packed(cls, p: int, q: int, rows: Sequence[int]) -> BinaryMatrix:
        out = object.__new__(cls)
        out.p, out.q, out._rows = p, q, tuple(rows)
        return out

    @classmethod
    def zeros(cls, p: int, q: int) -> BinaryMatrix:
        if p < 1 or q < 1:
            raise GraphError("matrix dimensions must be positive")
        return cls._packed(p, q, [0] * p)

    def row(self, i: int) -> tuple[int, ...]:
        r = self._rows[i]
        return tuple((r >> (self.q - 1 - j)) & 1 for j in range(self.q))

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.p)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not 0 <= j < self.q:
            raise IndexError(j)
        return (self._rows[i] >> (self.q - 1 - j)) & 1

    def transpose(self) -> BinaryMatrix:
        cols = []
        for j in range(self.q):
            shift = self.q - 1 - j
            c = 0
            for r in self._rows:
                c = (c << 1) | ((r >> shift) & 1)
            cols.append(c)
        return BinaryMatrix._packed(self.q, self.p, cols)

    def rows_sorted(self) -> bool:
        return all(a <= b for a, b in zip(self._rows, self._rows[1:]))

    def cols_sorted(self) -> bool:
        return self.transpose().rows_sorted()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return (self.p, self.q, self._rows) == (other.p, other.q, other._rows)

    def __hash__(self) -> int:
        return hash((self.p, self.q, self._rows))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows()!r})"

    def __str__(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.rows())


def sort_rows_lex(m: BinaryMatrix) -> BinaryMatrix:
    """Rows in non-decreasing lexicographic order; equal rows keep their order."""
    return BinaryMatrix._packed(m.p, m.q, sorted(m._rows))


def sort_cols_lex(m: BinaryMatrix) -> BinaryMatrix:
    return sort_rows_lex(m.transpose()).transpose()


def potential_vector(m: BinaryMatrix) -> tuple[int, ...]:
    """Entries read row by row."""
    return tuple(x for r in m.rows() for x in r)


@dataclass(frozen=True)
class FixpointReport:
    final: BinaryMatrix
    steps: int
    potential_trace: list[tuple[int, ...]] = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "p": self.final.p,
            "q": self.final.q,
            "steps": self.steps,
            "final": str(self.final).splitlines(),
            "potential_trace": ["".join(map(str, v)) for v in self.potential_trace],
        }


def iterate_to_fixpoint(m: BinaryMatrix, max_steps: int | None = None) -> FixpointReport:
    """Alternate row sorts (first) and column sorts until nothing moves.

    A pass that changes nothing ends the run once the other orientation is
    sorted as well; that pass is counted in ``steps``.  ``potential_trace``
    holds the row-major vector before the first pass and after each pass.
    """
    bound = m.p * m.q + 2
    limit = bound if max_steps is None else max_steps
    if limit < 1:
        raise ValueError("max_steps must be at least 1")
    trace = [potential_vector(m)]
    cur = m
    for step in range(1, limit + 1):
        rows_pass = step % 2 == 1
        nxt = sort_rows_lex(cur) if rows_pass else sort_cols_lex(cur)
        trace.append(potential_vector(nxt))
        if nxt == cur and (nxt.cols_sorted() if rows_pass else nxt.rows_sorted()):
            return FixpointReport(nxt, step, trace)
        cur = nxt
    if max_steps is None:
        raise AssertionError(f"no fixpoint within {bound} passes; the potential argument is violated")
    raise BudgetExceeded(f"no fixpoint within {limit} passes", trace)


def cobipartite_matrix(
    graph: Graph, sigma: Ordering, first_side: Iterable[str] | None = None
) -> tuple[BinaryMatrix, list[str], list[str]]:
    """Adjacency matrix between the two cliques that ``sigma`` lists back to back.

    With ``sigma = a_1..a_p, b_q..b_1`` row ``i`` is ``a_i`` and column ``j``
    is ``b_j`` (so columns run through the second clique right to left).  The
    first clique is the longest clique prefix of ``sigma`` unless
    ``first_side`` fixes it.  Returns the matrix with its row and column
    vertex lists.
    """
    sigma.indices(graph)
    if first_side is None:
        split = clique_split(graph, sigma)
        if not split.suffix_is_clique:
            raise GraphError("ordering does not split into two cliques")
        p = split.index
    else:
        side = set(first_side)
        p = len(side)
        if set(sigma[:p]) != side:
            raise GraphError("first_side is not a prefix of the ordering")
    a = list(sigma[:p])
    b = list(reversed(sigma[p:]))
    for part in (a, b):
        for i, u in enumerate(part):
            for w in part[i + 1 :]:
                if not graph.has_edge(u, w):
                    raise GraphError(f"{u} and {w} are on the same side but not adjacent")
    if not a or not b:
        raise GraphError("both cliques must be nonempty")
    rows = [[1 if graph.has_edge(u, w) else 0 for w in b] for u in a]
    return BinaryMatrix(rows), a, b


def parse_matrix(text: str) -> BinaryMatrix:
    lines = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ParseError("empty matrix file")
    no, header = lines[0]
    try:
        p, q = (int(t) for t in header.split())
    except ValueError:
        raise ParseError(f"expected 'p q' header, got {header!r}", no) from None
    if p < 1 or q < 1:
        raise ParseError("matrix dimensions must be positive", no)
    body = lines[1:]
    if len(body) != p:
        raise ParseError(f"expected {p} rows, got {len(body)}")
    rows = []
    for no, ln in body:
        if len(ln) != q or set(ln) - {"0", "1"}:
            raise ParseError(f"expected {q} characters from {{0,1}}, got {ln!r}", no)
        rows.append([int(c) for c in ln])
    return BinaryMatrix(rows)


def serialize_matrix(m: BinaryMatrix) -> str:
    return f"{m.p} {m.q}\n{m}\n"
