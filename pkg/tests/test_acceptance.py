"""The eleven acceptance criteria, one test each.

Each criterion records a ``criterion N (...): pass|fail`` line that pytest
prints in its terminal summary.  Running this file directly prints the same
lines without pytest.
"""

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES  # noqa: E402

from cascade_kit import (  # noqa: E402
    SimpleType,
    build,
    canonical_types,
    cascade_element,
    cascade_of,
    fixtures,
    kostant_for_cascade,
    longest_element,
    orbit_data,
    regular_certificate,
    spectrum_of,
    tap_data,
    z2_grading,
)
from cascade_kit import classical as cl  # noqa: E402
from cascade_kit.cascade import canonical_tree, tree_signature  # noqa: E402
from cascade_kit.cascade_element import (  # noqa: E402
    frobenius_spectrum_check,
    rho_decompositions,
    subtype_coxeter_numbers,
    symmetry_check,
)
from cascade_kit.kostant_ideal import (  # noqa: E402
    check_admissible,
    min_max_elements,
    random_admissible,
    w_inverse_of_pi,
)
from cascade_kit.orbit import (  # noqa: E402
    classical_orbit_dimension,
    height_witness,
    partition_oracle,
)

TYPES = canonical_types(12)
NON_A_EVEN = [t for t in TYPES if not t.is_a_even]
SEED = 20240601


class Failed(Exception):
    pass


def check(cond, what):
    if not cond:
        raise Failed(what)


def _neg(v):
    return tuple(-x for x in v)


def _add(a, b, sign=1):
    return tuple(x + sign * y for x, y in zip(a, b))


# 1 ---------------------------------------------------------------------------------


def criterion_1():
    closed = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n, "D": lambda n: n * (n - 1)}
    exceptional = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}
    for t in TYPES:
        rs = build(t)
        want = closed[t.family](t.rank) if t.is_classical else exceptional[str(t)]
        check(rs.n_positive == want, f"{t}: {rs.n_positive} positive roots, expected {want}")
        check(rs.theta == fixtures.theta(t), f"{t}: theta {rs.theta}")
        if t.is_classical:
            model = {cl.eps_to_alpha(t.family, t.rank, v) for v in cl.positive_roots(t.family, t.rank)}
            check(set(rs.positive_roots) == model, f"{t}: root set differs from the eps model")


# 2 ---------------------------------------------------------------------------------


def criterion_2():
    rng = random.Random(SEED)
    for t in TYPES:
        c = cascade_of(t)
        rs = c.rs
        betas = c.betas
        for i, a in enumerate(betas):
            for b in betas[i + 1 :]:
                check(rs.pairing(a, b) == 0, f"{t}: {a}, {b} not orthogonal")
                check(not rs.is_root(_add(a, b)) and not rs.is_root(_add(a, b, -1)), f"{t}: {a} +- {b} is a root")
        union = [g for n in c for g in n.heisenberg]
        check(len(union) == len(set(union)) == rs.n_positive, f"{t}: Heisenberg subsets do not partition")
        for i in range(len(c)):
            for j in range(len(c)):
                if i != j:
                    check(
                        rs.root_order_leq(betas[i], betas[j]) == c.is_descendant(i, j),
                        f"{t}: cascade order differs from root order at {i + 1}, {j + 1}",
                    )
            above = [j for j in range(len(c)) if j != i and rs.root_order_leq(betas[i], betas[j])]
            if i:
                minimal = [j for j in above if not any(k != j and rs.root_order_leq(betas[k], betas[j]) for k in above)]
                check(minimal == [c[i].parent], f"{t}: node {i + 1} does not have a unique parent")
            for a in above:
                for b in above:
                    check(
                        rs.root_order_leq(betas[a], betas[b]) or rs.root_order_leq(betas[b], betas[a]),
                        f"{t}: interval above {i + 1} is not a chain",
                    )
        phi = sorted(k for n in c for k in n.phi)
        check(phi == list(range(rs.rank)), f"{t}: phi sets do not partition the simple roots")
        for n in c:
            for k in n.support:
                check((k in n.phi) == (rs.pairing(rs.simple_root(k), n.beta) > 0), f"{t}: phi of {n.index + 1}")
        short = [b for b in betas if not rs.is_long(b)]
        if (t.family == "B" and t.rank % 2) or str(t) == "G2":
            check(len(short) == 1 and short[0] in rs.simple_roots, f"{t}: short cascade roots {short}")
        else:
            check(not short, f"{t}: unexpected short cascade roots {short}")
        w0 = longest_element(c)
        for _ in range(3):
            check(longest_element(c, rng) == w0, f"{t}: product depends on the order of the factors")
        check(rs.sends_positive_to_negative(w0), f"{t}: w0 does not reverse the positive roots")
        check(all(w0.apply(b) == _neg(b) for b in betas), f"{t}: w0 does not negate the cascade")


# 3 ---------------------------------------------------------------------------------


def criterion_3():
    half = Fraction(1, 2)
    for t in TYPES:
        c = cascade_of(t)
        rs = c.rs
        spec = spectrum_of(c)
        vals = spec.value_set
        if t.family in "AC" and not t.is_a_even:
            want = {Fraction(1)} if str(t) == "A1" else {Fraction(0), Fraction(1)}
        elif t.is_a_even:
            want = {half, Fraction(1)} if t.rank == 2 else {Fraction(0), half, Fraction(1)}
        else:
            want = {Fraction(v) for v in (-1, 0, 1, 2)}
        check(vals == want, f"{t}: value set {sorted(vals)}")
        check(-1 <= spec.min and spec.max <= 2, f"{t}: values outside [-1, 2]")
        check(all(v.denominator == 1 for v in vals) != t.is_a_even, f"{t}: integrality")
        pairs = symmetry_check(c)
        check(len(pairs) == rs.n_positive - len(c), f"{t}: value pairing misses roots")
        check(rs.marks(cascade_element(c)) == fixtures.marks(t), f"{t}: marks differ from the reference")
        if rs.is_theta_fundamental():
            td = tap_data(c)
            check(td is not None and sum(td.c) == 3, f"{t}: tap data")


# 4 ---------------------------------------------------------------------------------


def _in_qvee_list(t: SimpleType) -> bool:
    if t.family == "B":
        return t.rank % 4 in (3, 0)  # B_{4p-1}, B_{4p}
    if t.family == "D":
        return t.rank % 4 in (0, 1)  # D_{4p}, D_{4p+1}
    return str(t) in ("E6", "E8", "F4", "G2")


def criterion_4():
    for t in TYPES:
        c = cascade_of(t)
        rs = c.rs
        x = cascade_element(c)
        check(rs.lattice_member(x, "Pvee") != t.is_a_even, f"{t}: P^vee membership")
        check(rs.lattice_member(x, "Qvee") == _in_qvee_list(t), f"{t}: Q^vee membership")
        dec = rho_decompositions(c)
        nums = subtype_coxeter_numbers(c)
        check(dec.rho2_coeffs == tuple(hd - 1 for _, hd in nums), f"{t}: 2 rho decomposition")
        check(dec.rho2_vee_coeffs == tuple(h - 1 for h, _ in nums), f"{t}: 2 rho^vee decomposition")


# 5 ---------------------------------------------------------------------------------


def criterion_5():
    for t in TYPES:
        c = cascade_of(t)
        rs = c.rs
        x = cascade_element(c)
        half = Fraction(rs.n_positive + len(c), 2)
        two_rho = rs.pairing(rs.rho * 2, x)
        cox = sum(hd - 1 for _, hd in subtype_coxeter_numbers(c))
        check(half == two_rho == cox, f"{t}: {half}, {two_rho}, {cox}")
        check(frobenius_spectrum_check(c).ok, f"{t}: spectrum model not symmetric about 1/2")


# 6 ---------------------------------------------------------------------------------


def criterion_6():
    rng = random.Random(SEED)
    for t in NON_A_EVEN:
        c = cascade_of(t)
        rs = c.rs
        kd = kostant_for_cascade(c)
        g = kd.grading
        check(rs.inversion_set(kd.w) == g.part(1) | g.part(2), f"{t}: N(w_K)")
        check(rs.is_abelian(kd.ideal) and rs.is_upper_ideal(kd.ideal), f"{t}: a_K shape")
        check(min_max_elements(rs, g, kd.w, kd.ideal).ok, f"{t}: minimal/maximal elements")
        heights = {k for k in range(1, sum(rs.theta) + 2) if kd.ideal == {r for r in rs.positive_roots if sum(r) >= k}}
        check(heights == {kd.d}, f"{t}: height threshold")
        check(w_inverse_of_pi(rs, g, kd.w).ok, f"{t}: w_K^-1(Pi)")
    for t in TYPES:
        rs = build(t)
        for z in random_admissible(rs, rng, 100):
            bad = [k for k, v in check_admissible(rs, z).items() if not v]
            check(not bad, f"{t}: random z {list(z)} fails {bad}")


# 7 ---------------------------------------------------------------------------------


def criterion_7():
    orders = {"F4": 3, "E6": 3, "G2": 3, "E7": 18, "E8": 5}
    for t in NON_A_EVEN:
        c = cascade_of(t)
        w = kostant_for_cascade(c).w
        if t.family in "AC":
            check(w.order() == 2, f"{t}: order {w.order()}")
        elif not t.is_classical:
            check(w.order() == orders[str(t)], f"{t}: order {w.order()}")
        images = fixtures.w_k_images(t)
        if images is not None:
            check(w.images() == images, f"{t}: images of the simple roots differ from the reference")
        else:
            check(w == c.rs.word([i - 1 for i in fixtures.w_k_word(t)]), f"{t}: w_K differs from the reference word")
        if t.family in "BD":
            check(w.order() == fixtures.w_k_order(t), f"{t}: order differs from the signed permutation")


# 8 ---------------------------------------------------------------------------------


def criterion_8():
    for t in NON_A_EVEN:
        c = cascade_of(t)
        rs = c.rs
        z = z2_grading(c)
        check(z.dim_g0 == rs.rank + rs.n_positive - len(c), f"{t}: dim g0")
        check(z.dim_g1 == rs.n_positive + len(c), f"{t}: dim g1")
        nu, _ = regular_certificate(c)
        check(all(rs.pairing(g, nu) != 0 for g in rs.positive_roots), f"{t}: certificate is not regular")


# 9 ---------------------------------------------------------------------------------


def criterion_9():
    for t in TYPES:
        c = cascade_of(t)
        od = orbit_data(c)
        ref = fixtures.orbit_table(t)
        check(list(od.wdd) == ref["wdd"], f"{t}: wdd {od.wdd}")
        check((od.dim, od.g2, od.g4) == (ref["dim"], ref["g2"], ref["g4"]), f"{t}: dims {od.dim}, {od.g2}, {od.g4}")
        if t.is_classical:
            check(list(od.partition) == ref["partition"], f"{t}: partition {od.partition}")
        else:
            check(od.label == ref["label"], f"{t}: label {od.label}")
        if not t.is_a_even:
            check(2 * od.g4 == len(kostant_for_cascade(c).ideal), f"{t}: 2 dim g(4) != dim a_K")
        if c.rs.is_theta_fundamental():
            chain = height_witness(c)
            check(od.height == 4 and all(c.rs.is_root(g) for g in chain), f"{t}: height 4 witness")
        else:
            check(od.height == 2, f"{t}: height {od.height}")
        check(od.spherical == (t.family in "AC"), f"{t}: sphericity")


# 10 --------------------------------------------------------------------------------


def criterion_10():
    for t in TYPES:
        if not t.is_classical:
            continue
        c = cascade_of(t)
        p = partition_oracle(c)
        check(p == fixtures.orbit_table(t)["partition"], f"{t}: oracle partition {p}")
        check(classical_orbit_dimension(t.family, t.rank, p) == orbit_data(c).dim, f"{t}: partition dimension")


# 11 --------------------------------------------------------------------------------


def criterion_11():
    for name in ("A5", "C4", "B7", "D8", "D9", "E6", "E7", "E8", "F4", "G2"):
        t = SimpleType.parse(name)
        ref = fixtures.hasse(t)
        expected = canonical_tree([lab for lab, _ in ref], [None if p is None else p - 1 for _, p in ref])
        check(tree_signature(cascade_of(t)) == expected, f"{t}: Hasse diagram differs")


CRITERIA = [
    (1, "root counts and theta", criterion_1),
    (2, "cascade invariants", criterion_2),
    (3, "spectrum and marks", criterion_3),
    (4, "lattices and rho decompositions", criterion_4),
    (5, "trace identity", criterion_5),
    (6, "Kostant construction and random admissible z", criterion_6),
    (7, "golden w_K", criterion_7),
    (8, "involution dimensions and regular certificate", criterion_8),
    (9, "orbit tables", criterion_9),
    (10, "matrix oracle equivalence", criterion_10),
    (11, "Hasse diagrams", criterion_11),
]


def run_criterion(number, title, fn):
    start = time.perf_counter()
    try:
        fn()
        status, detail = "pass", ""
    except Failed as e:
        status, detail = "fail", str(e)
    line = f"criterion {number} ({title}): {status} [{time.perf_counter() - start:.2f}s]"
    if detail:
        line += f" {detail}"
    return status, line


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    status, line = run_criterion(number, title, fn)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert status == "pass", line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(s == "pass" for s, _ in results) else 1)
