from fractions import Fraction

from hypothesis import given, strategies as st
from sympy import Matrix

from clustermorph.linalg import coordinates, det, in_span, rank, smith_invariants, solve

small = st.integers(-6, 6)
square3 = st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3)


@given(square3)
def test_det_and_rank_match_sympy(m):
    assert det(m) == Matrix(m).det()
    assert rank(m) == Matrix(m).rank()


@given(square3, st.lists(small, min_size=3, max_size=3))
def test_solve_is_a_solution(m, b):
    x = solve(m, b)
    if x is None:
        assert Matrix(m).rank() < Matrix.hstack(Matrix(m), Matrix(b)).rank()
    else:
        assert [sum(Fraction(a) * xi for a, xi in zip(row, x)) for row in m] == b


def test_coordinates():
    assert coordinates([(1, 1), (0, 1)], (2, 3)) == (2, 1)
    assert coordinates([(1, 1)], (1, 0)) is None
    assert in_span([(1, 1, 0)], (2, 2, 0))


def test_smith_invariants():
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]
    assert smith_invariants([[0, 0]]) == []
    assert smith_invariants([], 0, 3) == []
