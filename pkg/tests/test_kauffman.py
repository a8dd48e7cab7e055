import cmath
import random

import pytest
from hypothesis import given, settings, strategies as st

from linkdet.errors import LimitExceededError
from linkdet.generators import random_plane_map
from linkdet.graph import signed_tree_count, spanning_tree_masks
from linkdet.io import builtin
from linkdet.kauffman import (
    LOOP_VALUE,
    ONE,
    ZERO,
    CyclotomicInt,
    bracket_at_primitive8,
    bracket_from_trees,
    bracket_phase_exponent,
    det_via_bracket,
    monocyclic_states,
    state_circles,
    state_stats,
    state_weight,
)

from support import ISTHMUS, P2, TRIANGLE, corpus

Z = cmath.exp(1j * cmath.pi / 4)
cyc = st.builds(CyclotomicInt, *(st.integers(-20, 20) for _ in range(4)))


# -- ring arithmetic ---------------------------------------------------------

def test_zeta_has_order_eight():
    z = CyclotomicInt.zeta()
    assert z ** 8 == ONE and z ** 4 == -ONE
    assert all(CyclotomicInt.zeta(k) == z ** k for k in range(8))
    assert CyclotomicInt.zeta(-1) == z ** 7


def test_loop_value_vanishes():
    assert LOOP_VALUE == ZERO


@settings(max_examples=200)
@given(cyc, cyc, cyc)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


@settings(max_examples=200)
@given(cyc, cyc)
def test_matches_complex_arithmetic(a, b):
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-6 * (1 + abs(complex(a)) * abs(complex(b)))
    assert abs(complex(a.conjugate()) - complex(a).conjugate()) < 1e-9 * (1 + abs(complex(a)))
    assert abs(complex(a.times_zeta(3)) - complex(a) * Z ** 3) < 1e-9 * (1 + abs(complex(a)))


@given(st.integers(-50, 50), st.integers(0, 7))
def test_abs_of_integer_times_unit(n, k):
    assert CyclotomicInt(n).times_zeta(k).abs_int() == abs(n)


def test_abs_rejects_irrational_modulus():
    with pytest.raises(ValueError):
        (ONE + CyclotomicInt.zeta()).abs_int()
    with pytest.raises(ValueError):
        (ONE + CyclotomicInt.zeta(2)).abs_int()       # |1 + i| = sqrt 2


# -- states ------------------------------------------------------------------

def test_state_statistics_examples():
    s = state_stats(TRIANGLE, 0b111)
    assert (s.c_pos, s.d_pos, s.alpha, s.beta) == (3, 0, 3, 0)
    s = state_stats(TRIANGLE, 0b011)
    assert (s.c_pos, s.d_pos) == (2, 1)


def test_state_counts_partition_signs():
    for m in corpus(41, 30, max_edges=9):
        g = m.graph
        n_pos = sum(1 for e in g.edges if e.sign == 1)
        for state in range(1 << g.n_vars):
            s = state_stats(g, state)
            assert s.c_pos + s.d_pos == n_pos == s.n_pos
            assert s.c_neg + s.d_neg == len(g.edges) - n_pos == s.n_neg


def test_circle_examples():
    assert state_circles(TRIANGLE, 0b111) == 2
    assert state_circles(TRIANGLE, 0b011) == 1
    assert state_circles(TRIANGLE, 0) == 3


def test_state_out_of_range_is_rejected():
    with pytest.raises(ValueError):
        state_circles(TRIANGLE, 0b1000)


def test_monocyclic_states_are_spanning_trees():
    for m in corpus(42, 60, max_edges=10):
        g = m.graph
        assert monocyclic_states(g) == sorted(spanning_tree_masks(g))


def test_monocyclic_identity_for_tree_states():
    # d+ = c- + n+ - |V| + 1 on every spanning-tree state
    for m in corpus(43, 60, max_edges=10):
        g = m.graph
        for t in spanning_tree_masks(g):
            s = state_stats(g, t)
            assert s.d_pos == s.c_neg + s.n_pos - g.vertex_count + 1


# -- bracket -----------------------------------------------------------------

def test_bracket_examples():
    assert bracket_at_primitive8(ISTHMUS).abs_int() == 1
    assert bracket_at_primitive8(TRIANGLE).abs_int() == 3
    assert bracket_at_primitive8(P2, [1, -1]).abs_int() == 0
    fig5 = builtin("fig5").graph()
    assert bracket_at_primitive8(fig5, [-1, -1] + [1] * 6).abs_int() == 15


def test_bracket_matches_state_by_state_sum():
    for m in corpus(44, 40, max_edges=9):
        g = m.graph
        total = ZERO
        for state in range(1 << g.n_vars):
            total = total + state_weight(state_stats(g, state))
        assert total == bracket_at_primitive8(g)


def test_multicyclic_states_weigh_zero():
    for m in corpus(45, 40, max_edges=9):
        g = m.graph
        for state in range(1 << g.n_vars):
            s = state_stats(g, state)
            if s.circles > 1:
                assert state_weight(s) == ZERO
        assert bracket_at_primitive8(g) == bracket_at_primitive8(g, monocyclic_only=True)


def test_phase_identity():
    for m in corpus(46, 80, max_edges=10):
        g = m.graph
        assert bracket_at_primitive8(g) == bracket_from_trees(g)


def test_phase_exponent_on_fig5():
    g = builtin("fig5").with_signs([-1, -1] + [1] * 6).graph()
    # n = 8, n+ = 6, |V| = 5
    assert bracket_phase_exponent(g) == 8 - 12 + 10 - 2
    assert bracket_at_primitive8(g) == CyclotomicInt(15)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 11))
def test_bracket_determinant_agrees_with_trees(seed, n):
    g = random_plane_map(random.Random(seed), n).graph
    d = abs(signed_tree_count(g))
    assert det_via_bracket(g) == d
    assert bracket_at_primitive8(g).abs_int() == d


def test_state_sum_limit():
    g = builtin("fig5").graph()
    with pytest.raises(LimitExceededError):
        bracket_at_primitive8(g, limit=7)
