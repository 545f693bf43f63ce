from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from cascade_kit.linalg import inverse, matmul, rank, solve

small = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrices(r, c))))
def test_rank_agrees_with_floating_point(m):
    assert rank(m) == np.linalg.matrix_rank(np.array(m, dtype=float))


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n)))
def test_inverse_and_solve(m):
    if rank(m) < len(m):
        return
    inv = inverse(m)
    ident = matmul(m, inv)
    assert ident == [[Fraction(int(i == j)) for j in range(len(m))] for i in range(len(m))]
    rhs = [Fraction(k + 1, 3) for k in range(len(m))]
    x = solve(m, rhs)
    assert [sum(Fraction(a) * b for a, b in zip(row, x)) for row in m] == rhs
