import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from cp2tri import exact


def test_smith_divisors_identity():
    assert exact.smith_divisors(np.eye(3, dtype=int)) == [1, 1, 1]


def test_smith_divisors_diagonal_normalization():
    assert exact.smith_divisors([[2, 0], [0, 3]]) == [1, 6]
    assert exact.smith_divisors([[4, 0], [0, 6]]) == [2, 12]


def test_smith_divisors_known_torsion():
    # presentation matrix of Z_2 + Z_4
    assert exact.smith_divisors([[2, 0], [0, 4]]) == [2, 4]
    assert exact.smith_divisors([[2, 1], [0, 2]]) == [1, 4]


def test_zero_matrix():
    assert exact.smith_divisors([[0, 0], [0, 0]]) == []
    assert exact.rank([[0, 0], [0, 0]]) == 0


def test_rank_simple():
    assert exact.rank([[1, 2], [2, 4]]) == 1
    assert exact.rank([[1, 0], [0, 1]]) == 2


matrices = st.lists(
    st.lists(st.integers(-6, 6), min_size=1, max_size=6),
    min_size=1, max_size=6,
).filter(lambda rows: len({len(r) for r in rows}) == 1)


@given(matrices)
@settings(max_examples=150, deadline=None)
def test_snf_rank_matches_rational_rank(mat):
    divisors = exact.smith_divisors(mat)
    assert len(divisors) == exact.rank(mat)
    assert len(divisors) == np.linalg.matrix_rank(np.array(mat, dtype=float) + 0.0)
    # divisibility chain
    for a, b in zip(divisors, divisors[1:]):
        assert b % a == 0


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_snf_divisor_products_match_minor_gcds(mat):
    """d1*...*dk equals the gcd of all k x k minors (Smith normal form
    characterization), checked for k = 1."""
    divisors = exact.smith_divisors(mat)
    entries = [abs(v) for row in mat for v in row if v]
    if entries:
        from math import gcd
        g = 0
        for e in entries:
            g = gcd(g, e)
        assert divisors[0] == g
    else:
        assert divisors == []
