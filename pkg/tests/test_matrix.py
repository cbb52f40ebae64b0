from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lexcycle.constructions import gen_cobipartite
from lexcycle.errors import BudgetExceeded, GraphError, ParseError
from lexcycle.graph import Graph, Ordering
from lexcycle.matrix import (
    BinaryMatrix,
    cobipartite_matrix,
    iterate_to_fixpoint,
    parse_matrix,
    potential_vector,
    serialize_matrix,
    sort_cols_lex,
    sort_rows_lex,
)
from lexcycle.sweep import plus_sweep

matrices = st.integers(1, 7).flatmap(
    lambda p: st.integers(1, 7).flatmap(
        lambda q: st.lists(st.lists(st.integers(0, 1), min_size=q, max_size=q), min_size=p, max_size=p)
    )
)


def rand_matrix(rng, p, q):
    return BinaryMatrix([[rng.randint(0, 1) for _ in range(q)] for _ in range(p)])


def test_construct_and_index():
    m = BinaryMatrix([[0, 1, 1], [1, 0, 0]])
    assert (m.p, m.q) == (2, 3) and m[0, 2] == 1 and m[1, 1] == 0
    assert m.transpose().rows() == [(0, 1), (1, 0), (1, 0)]
    with pytest.raises(GraphError):
        BinaryMatrix([[0, 2]])
    with pytest.raises(GraphError):
        BinaryMatrix([[0, 1], [1]])
    with pytest.raises(GraphError):
        BinaryMatrix([])


def test_sort_examples():
    z = BinaryMatrix.zeros(3, 3)
    assert sort_rows_lex(z) == z and sort_cols_lex(z) == z
    assert sort_rows_lex(BinaryMatrix([[1, 0], [0, 1]])).rows() == [(0, 1), (1, 0)]


@given(matrices)
def test_sorts_match_python_sorted(rows):
    m = BinaryMatrix(rows)
    assert sort_rows_lex(m).rows() == sorted(tuple(r) for r in rows)
    cols = sorted(zip(*rows))
    assert sort_cols_lex(m).rows() == [tuple(r) for r in zip(*cols)]
    assert sort_rows_lex(sort_rows_lex(m)) == sort_rows_lex(m)


def test_potential_vector():
    assert potential_vector(BinaryMatrix([[0, 1], [1, 0]])) == (0, 1, 1, 0)
    rng = random.Random(1)
    for _ in range(20):
        p, q = rng.randint(1, 6), rng.randint(1, 6)
        assert len(potential_vector(rand_matrix(rng, p, q))) == p * q


def test_fixpoint_examples():
    assert iterate_to_fixpoint(BinaryMatrix.zeros(4, 5)).steps == 1
    rep = iterate_to_fixpoint(BinaryMatrix([[1, 0], [0, 1]]))
    assert rep.steps == 2 and rep.final.rows() == [(0, 1), (1, 0)]


def _brute_fixpoint(rows):
    cur, step = [tuple(r) for r in rows], 0
    while True:
        step += 1
        nxt = sorted(cur) if step % 2 else [tuple(r) for r in zip(*sorted(zip(*cur)))]
        other_sorted = (lambda m: list(zip(*m)) == sorted(zip(*m))) if step % 2 else (lambda m: m == sorted(m))
        if nxt == cur and other_sorted(nxt):
            return nxt, step
        cur = nxt


def test_all_2x2_against_brute_force():
    for bits in product((0, 1), repeat=4):
        rows = [bits[:2], bits[2:]]
        rep = iterate_to_fixpoint(BinaryMatrix(rows))
        final, steps = _brute_fixpoint(rows)
        assert rep.final.rows() == final and rep.steps == steps


def test_random_fixpoints_sorted_and_monotone():
    rng = random.Random(2)
    for _ in range(1000):
        m = rand_matrix(rng, 6, 6)
        rep = iterate_to_fixpoint(m)
        assert rep.final.rows_sorted() and rep.final.cols_sorted()
        assert rep.steps <= 6 * 6 + 2
        tr = rep.potential_trace
        assert all(a >= b for a, b in zip(tr, tr[1:]))
        # strictly decreasing whenever a pass changed the matrix
        assert all(a > b for a, b in zip(tr[:-2], tr[1:-1]) if a != b) and tr[-1] == tr[-2]


def test_fixpoint_budget():
    rng = random.Random(3)
    m = next(x for x in (rand_matrix(rng, 5, 5) for _ in range(100)) if iterate_to_fixpoint(x).steps > 2)
    with pytest.raises(BudgetExceeded):
        iterate_to_fixpoint(m, max_steps=1)


def test_cobipartite_matrix_trivial_cases():
    a, b = ["a1", "a2"], ["b1", "b2", "b3"]
    clique_pairs = [(u, w) for side in (a, b) for i, u in enumerate(side) for w in side[i + 1 :]]
    join = Graph(a + b, clique_pairs + [(u, w) for u in a for w in b])
    disjoint = Graph(a + b, clique_pairs)
    order = Ordering(a + b[::-1])
    m, rows, cols = cobipartite_matrix(disjoint, order)
    assert m == BinaryMatrix.zeros(2, 3) and rows == a and cols == b
    m, _, _ = cobipartite_matrix(join, order, first_side=a)
    assert all(x == 1 for x in potential_vector(m))
    with pytest.raises(GraphError):
        cobipartite_matrix(Graph("abc", [("a", "b")]), Ordering("acb"))


def test_cobipartite_columns_sorted_and_sweeps_sort_rows():
    for seed in range(100):
        rng = random.Random(seed)
        fx = gen_cobipartite(rng.randint(2, 8), rng.randint(2, 8), rng.random(), seed)
        g = fx.graph
        s = plus_sweep("lexbfs", g, fx["witness"])
        try:
            m, a, b = cobipartite_matrix(g, s)
        except GraphError:
            continue  # complete graph, one side empty
        assert m.cols_sorted()
        t = plus_sweep("lexbfs", g, s)
        m2, _, _ = cobipartite_matrix(g, t, first_side=b)
        assert m2 == sort_rows_lex(m).transpose()


def test_matrix_text_format():
    m = parse_matrix("# c\n2 3\n101\n010\n")
    assert m.rows() == [(1, 0, 1), (0, 1, 0)]
    assert parse_matrix(serialize_matrix(m)) == m
    for bad in ("", "2\n", "1 2\n10\n01\n", "1 2\n12\n", "0 0\n"):
        with pytest.raises(ParseError):
            parse_matrix(bad)


@given(matrices)
def test_potential_never_increases(rows):
    rep = iterate_to_fixpoint(BinaryMatrix(rows))
    trace = rep.potential_trace
    assert all(b <= a for a, b in zip(trace, trace[1:]))
    assert rep.final.rows_sorted() and rep.final.cols_sorted()
    assert rep.steps <= len(rows) * len(rows[0]) + 2
