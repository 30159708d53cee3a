import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from toricvgit.errors import ShapeError
from toricvgit.lp import LpProblem, lp_feasible

BLP2 = [[1, 1, 1, 0], [0, 0, 1, 1]]


def test_forced_zeros_block_target():
    assert not lp_feasible(LpProblem(BLP2, [2, 1], {2, 3}))


def test_zero_target_always_feasible():
    assert lp_feasible(LpProblem(BLP2, [0, 0], {0, 1, 2, 3}))


def test_target_in_cone():
    assert lp_feasible(LpProblem(BLP2, [2, 1]))


def test_outside_cone():
    assert not lp_feasible(LpProblem(BLP2, [-1, 0]))


def test_degenerate_cycling_candidate():
    # a classic degenerate system; Bland's rule must terminate
    A = [[1, -2, -3, -1, 0], [0, 1, 2, 1, 1], [1, 1, 1, 1, 1]]
    assert lp_feasible(LpProblem(A, [0, 0, 0]))
    assert lp_feasible(LpProblem(A, [0, 1, 1])) == oracles.lp_feasible(A, [0, 1, 1])


def test_shape_errors():
    with pytest.raises(ShapeError):
        LpProblem([[1, 2]], [1, 2])
    with pytest.raises(ShapeError):
        LpProblem([[1, 2], [1]], [1, 2])
    with pytest.raises(ShapeError):
        LpProblem([[1, 2]], [1], {5})


def test_large_entries():
    A = [[2**70, 1], [1, 2**70]]
    assert lp_feasible(LpProblem(A, [2**70 + 1, 2**70 + 1]))
    assert not lp_feasible(LpProblem(A, [-1, 5]))


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4), st.data())
def test_matches_basic_solution_enumeration(m, k, data):
    A = [[data.draw(st.integers(-3, 3)) for _ in range(k)] for _ in range(m)]
    b = [data.draw(st.integers(-4, 4)) for _ in range(m)]
    forced = data.draw(st.sets(st.integers(0, k - 1)))
    assert lp_feasible(LpProblem(A, b, forced)) == oracles.lp_feasible(A, b, forced)
