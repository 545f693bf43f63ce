import random

import pytest

from cascade_kit import classical as cl
from cascade_kit import fixtures
from cascade_kit.simple_type import SimpleType

CASES = [("A", 4), ("A", 5), ("B", 3), ("B", 4), ("C", 3), ("C", 4), ("D", 4), ("D", 5)]


def _mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _t(a):
    return [list(r) for r in zip(*a)]


def _in_algebra(family, n, x):
    if family == "A":
        return sum(x[i][i] for i in range(len(x))) == 0
    j = cl.invariant_form(family, n)
    lhs = _mul(_t(x), j)
    rhs = _mul(j, x)
    return all(a + b == 0 for r1, r2 in zip(lhs, rhs) for a, b in zip(r1, r2))


@pytest.mark.parametrize("family,n", CASES)
def test_root_vectors_lie_in_the_algebra_with_the_right_weight(family, n):
    rng = random.Random(n)
    d = cl.ambient_dim(family, n)
    h = [rng.randint(-50, 50) for _ in range(d)]
    diag = [cl.eps_form(family, w, h) for w in cl.diagonal_weights(family, n)]
    roots = cl.positive_roots(family, n)
    roots += [tuple(-v for v in r) for r in roots]
    for r in roots:
        x = cl.root_vector(family, n, r)
        assert any(any(row) for row in x)
        assert _in_algebra(family, n, x), r
        weight = cl.eps_form(family, r, h)
        for a, row in enumerate(x):
            for b, v in enumerate(row):
                if v:
                    assert diag[a] - diag[b] == weight


@pytest.mark.parametrize("family,n", [("B", 3), ("C", 3), ("D", 4)])
def test_invariant_form_symmetry(family, n):
    j = cl.invariant_form(family, n)
    sign = -1 if family == "C" else 1
    assert all(j[a][b] == sign * j[b][a] for a in range(len(j)) for b in range(len(j)))


@pytest.mark.parametrize("family,n", CASES)
def test_eps_alpha_round_trip(family, n):
    for r in cl.positive_roots(family, n):
        c = cl.eps_to_alpha(family, n, r)
        assert all(isinstance(v, int) and v >= 0 for v in c)
        assert tuple(cl.alpha_to_eps(family, n, c)) == tuple(r)


def test_signed_permutation_orders():
    assert fixtures.signed_permutation_order({1: (2, 1), 2: (1, 1)}) == 2
    assert fixtures.signed_permutation_order({1: (1, -1)}) == 2
    assert fixtures.signed_permutation_order({1: (2, 1), 2: (3, 1), 3: (1, -1)}) == 6
    assert fixtures.w_k_order(SimpleType("D", 8)) == 4
