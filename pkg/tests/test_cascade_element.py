from collections import Counter
from fractions import Fraction

import pytest
from conftest import ALL_NAMES, NON_A_EVEN
from hypothesis import given
from hypothesis import strategies as st

from cascade_kit import InvariantViolation, SimpleType, WeightVector, cascade_element, cascade_of, fixtures, tap_data
from cascade_kit.cascade_element import (
    frobenius_spectrum_check,
    qvee_classification,
    rho_decompositions,
    spectrum_of,
    subtype_coxeter_numbers,
    symmetry_check,
)
from cascade_kit.linalg import solve


@pytest.mark.parametrize("name", ALL_NAMES)
def test_x_k_solves_the_linear_system(name):
    c = cascade_of(name)
    rs = c.rs
    coroots = [rs.coroot(b) for b in c.betas]
    gram = [[rs.pairing(b, cv) for cv in coroots] for b in c.betas]
    coeffs = solve(gram, [1] * len(c))
    x = WeightVector([0] * rs.rank)
    for k, cv in zip(coeffs, coroots):
        x = x + cv * k
    assert x == cascade_element(c)
    assert all(k == Fraction(1, 2) for k in coeffs)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_marks_and_spectrum(name):
    t = SimpleType.parse(name)
    c = cascade_of(t)
    rs = c.rs
    x = cascade_element(c)
    assert rs.marks(x) == fixtures.marks(t)
    spec = spectrum_of(c)
    assert -1 <= spec.min and spec.max <= 2
    assert all(v.denominator == (2 if t.is_a_even else 1) or v.denominator == 1 for v in spec.value_set)
    assert any(v.denominator == 2 for v in spec.value_set) == t.is_a_even
    assert (spec.max == 2) == rs.is_theta_fundamental() == (t.family not in "AC")
    assert all(spec.values[b] == 1 for b in c.betas)
    assert spec.level(2) <= frozenset(g for g in rs.positive_roots if rs.is_long(g))


@pytest.mark.parametrize("name", ALL_NAMES)
def test_value_pairing(name):
    c = cascade_of(name)
    pairs = symmetry_check(c)
    assert len(pairs) == c.rs.n_positive - len(c)
    spec = spectrum_of(c)
    for g, h in pairs:
        assert spec.values[g] + spec.values[h] == 1
    ms = Counter(v for g, v in spec.values.items() if g not in set(c.betas))
    assert all(ms[1 - d] == m for d, m in ms.items())


@given(name=st.sampled_from(["B4", "D5", "E6", "F4", "C3"]), k=st.integers(0, 7), num=st.integers(1, 5))
def test_value_pairing_detects_wrong_element(name, k, num):
    c = cascade_of(name)
    x = cascade_element(c)
    k %= c.rs.rank
    bumped = WeightVector([v + (Fraction(num, 7) if i == k else 0) for i, v in enumerate(x)])
    # only nodes whose Heisenberg subset has more than the root itself see the change
    visible = any(len(n.heisenberg) > 1 and c.rs.pairing(n.beta, bumped) != 1 for n in c)
    if visible:
        with pytest.raises(InvariantViolation):
            symmetry_check(c, bumped)
    else:
        symmetry_check(c, bumped)


def test_tap_data_examples():
    b3 = tap_data(cascade_of("B3"))
    assert len(b3.J) == 2 and sorted(b3.c) == [1, 2]
    g2 = tap_data(cascade_of("G2"))
    assert g2.J == (1,) and g2.c == (3,) and g2.alpha == 1
    e6 = tap_data(cascade_of("E6"))
    assert len(e6.J) == 3 and set(e6.c) == {1}
    assert tap_data(cascade_of("C5")) is None and tap_data(cascade_of("A6")) is None


@pytest.mark.parametrize("name", ALL_NAMES)
def test_rho_identities_and_trace(name):
    c = cascade_of(name)
    rs = c.rs
    dec = rho_decompositions(c)
    nums = subtype_coxeter_numbers(c)
    assert dec.rho2_coeffs == tuple(hd - 1 for _, hd in nums)
    rep = frobenius_spectrum_check(c)
    assert rep.ok
    assert rep.trace == Fraction(rs.n_positive + len(c), 2)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_lattice_classification(name):
    t = SimpleType.parse(name)
    c = cascade_of(t)
    x = cascade_element(c)
    assert qvee_classification(c) == fixtures.in_coroot_lattice(t)
    assert c.rs.lattice_member(x, "Pvee") == (not t.is_a_even)


@pytest.mark.parametrize("name", NON_A_EVEN)
def test_rho_vee_minus_x_in_coroot_lattice(name):
    c = cascade_of(name)
    assert c.rs.lattice_member(c.rs.rho_vee - cascade_element(c), "Qvee")


def test_spectrum_json_uses_fraction_strings():
    j = spectrum_of(cascade_of("A4")).to_json()
    assert j == {"0/1": 2, "1/2": 4, "1/1": 4}
    j = spectrum_of(cascade_of("E6")).to_json()
    assert set(j) == {"-1/1", "0/1", "1/1", "2/1"} and j["-1/1"] == j["2/1"]
