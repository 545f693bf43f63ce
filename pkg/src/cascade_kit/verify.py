"""The per-type verification suite behind ``cascade-kit verify``.

Every check compares a computed object against an independent computation or
against the reference data in :mod:`cascade_kit.fixtures`.  A check that
raises is recorded as a failure with the exception text as detail.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import fixtures
from .cascade import Cascade, canonical_tree, compute_cascade, longest_element, tree_signature
from .cascade_element import (
    cascade_element,
    frobenius_spectrum_check,
    qvee_classification,
    rho_decompositions,
    spectrum_of,
    symmetrised_expansions,
    symmetry_check,
    tap_data,
)
from .errors import CascadeKitError, NotApplicable
from .involution import regular_certificate, z2_grading
from .kostant_ideal import (
    check_admissible,
    kostant_for_cascade,
    min_max_elements,
    random_admissible,
    w_inverse_of_pi,
)
from .orbit import (
    classical_orbit_dimension,
    classical_partition,
    height_witness,
    orbit_data,
    partition_oracle,
    regular_subalgebra_label,
)
from .root_system import RootSystem, WeightVector, build
from .simple_type import SimpleType, canonical_types

PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerifyReport:
    type: str
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if c.status == FAIL), None)

    def to_json(self) -> dict:
        return {"type": self.type, "checks": [c.to_json() for c in self.checks], "elapsed_ms": round(self.elapsed_ms, 3)}

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            line = f"{self.type}: {c.name}: {c.status}"
            if c.detail and c.status != PASS:
                line += f" ({c.detail})"
            out.append(line)
        return out


class _Suite:
    def __init__(self, report: VerifyReport):
        self.report = report

    def run(self, name: str, fn: Callable[[], object]) -> None:
        try:
            result = fn()
        except NotApplicable as e:
            self.report.checks.append(Check(name, NA, str(e)))
            return
        except (CascadeKitError, AssertionError, ArithmeticError, ValueError) as e:
            self.report.checks.append(Check(name, FAIL, f"{type(e).__name__}: {e}"))
            return
        if isinstance(result, tuple):
            ok, detail = result
        else:
            ok, detail = result, ""
        self.report.checks.append(Check(name, PASS if ok else FAIL, "" if ok else str(detail)))


def _na_for_a_even(t: SimpleType) -> None:
    if t.is_a_even:
        raise NotApplicable("not applicable: type A_{2p}")


def _neg(v) -> tuple:
    return tuple(-x for x in v)


# root system ----------------------------------------------------------------------


def _root_system_checks(s: _Suite, rs: RootSystem) -> None:
    t = rs.simple_type
    s.run("positive root count", lambda: (rs.n_positive == fixtures.n_positive(t), rs.n_positive))
    s.run("theta == reference", lambda: (rs.theta == fixtures.theta(t), rs.theta))
    s.run("2N = rank * h", lambda: 2 * rs.n_positive == rs.rank * rs.coxeter_numbers()[0])


# cascade ----------------------------------------------------------------------------


def _order_matches_tree(c: Cascade) -> bool:
    rs = c.rs
    for i in range(len(c)):
        for j in range(len(c)):
            if i != j and rs.root_order_leq(c.betas[i], c.betas[j]) != c.is_descendant(i, j):
                return False
    return True


def _unique_parent_and_chains(c: Cascade) -> bool:
    rs = c.rs
    for i in range(1, len(c)):
        above = [j for j in range(len(c)) if j != i and rs.root_order_leq(c.betas[i], c.betas[j])]
        minimal = [j for j in above if not any(k != j and rs.root_order_leq(c.betas[k], c.betas[j]) for k in above)]
        if minimal != [c.nodes[i].parent]:
            return False
        for a in above:
            for b in above:
                if not (rs.root_order_leq(c.betas[a], c.betas[b]) or rs.root_order_leq(c.betas[b], c.betas[a])):
                    return False
    return True


def _strongly_orthogonal(c: Cascade) -> bool:
    rs = c.rs
    for i, a in enumerate(c.betas):
        for b in c.betas[i + 1 :]:
            if rs.pairing(a, b) != 0:
                return False
            if rs.is_root(tuple(x + y for x, y in zip(a, b))) or rs.is_root(tuple(x - y for x, y in zip(a, b))):
                return False
    return True


def _phi_ok(c: Cascade) -> bool:
    rs = c.rs
    seen: list[int] = []
    for n in c.nodes:
        seen += list(n.phi)
        expected = {i for i in n.support if rs.pairing(rs.simple_root(i), n.beta) > 0}
        if set(n.phi) != expected:
            return False
        if not all(rs.simple_root(i) in n.heisenberg for i in n.phi):
            return False
    return sorted(seen) == list(range(rs.rank))


def _short_roots_ok(c: Cascade) -> tuple[bool, str]:
    rs = c.rs
    t = rs.simple_type
    short = [b for b in c.betas if not rs.is_long(b)]
    if (t.family == "B" and t.rank % 2) or str(t) == "G2":
        return len(short) == 1 and short[0] in set(rs.simple_roots), str(short)
    return not short, str(short)


def _w0_ok(c: Cascade, rng: random.Random) -> bool:
    rs = c.rs
    ws = [longest_element(c)] + [longest_element(c, rng) for _ in range(3)]
    w0 = ws[0]
    if any(w != w0 for w in ws):
        return False
    if any(w0.apply(b) != _neg(b) for b in c.betas):
        return False
    minus_id = bool((w0.matrix == -np.eye(rs.rank, dtype=np.int64)).all())
    return minus_id == (len(c) == rs.rank)


def _cascade_checks(s: _Suite, c: Cascade, rng: random.Random) -> None:
    rs = c.rs
    t = rs.simple_type
    s.run("cascade size", lambda: (len(c) == fixtures.cascade_size(t), len(c)))
    s.run("cascade roots == reference", lambda: set(c.betas) == set(fixtures.cascade(t)))
    s.run("hasse diagram == reference", lambda: _hasse_ok(c))
    s.run("strong orthogonality", lambda: _strongly_orthogonal(c))
    s.run("heisenberg subsets partition positive roots", lambda: sum(len(n.heisenberg) for n in c.nodes) == rs.n_positive)
    s.run("cascade order == root order", lambda: _order_matches_tree(c))
    s.run("unique parent and chain intervals", lambda: _unique_parent_and_chains(c))
    s.run("phi partitions the simple roots", lambda: _phi_ok(c))
    s.run("short cascade roots", lambda: _short_roots_ok(c))
    s.run("w0 from cascade reflections", lambda: _w0_ok(c, rng))


def _hasse_ok(c: Cascade) -> tuple[bool, str]:
    ref = fixtures.hasse(c.rs.simple_type)
    expected = canonical_tree([lab for lab, _ in ref], [None if p is None else p - 1 for _, p in ref])
    got = tree_signature(c)
    return got == expected, f"{got} != {expected}"


# cascade element ----------------------------------------------------------------------


def _value_set_ok(c: Cascade) -> tuple[bool, str]:
    t = c.rs.simple_type
    got = spectrum_of(c).value_set
    if t.family in "AC":
        expected = {Fraction(0), Fraction(1, 2), Fraction(1)} if t.is_a_even else {Fraction(0), Fraction(1)}
        if t.family == "A" and t.rank <= 2:
            # A1 has only theta; A2 has no root of value 0
            expected = {Fraction(1)} if t.rank == 1 else {Fraction(1, 2), Fraction(1)}
    else:
        expected = {Fraction(v) for v in (-1, 0, 1, 2)}
    return got == expected, str(sorted(got))


def _marks_shape_ok(c: Cascade) -> bool:
    rs = c.rs
    marks = rs.marks(cascade_element(c))
    if not set(marks) <= {Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1)}:
        return False
    signed = [i for i, m in enumerate(marks) if abs(m) == 1]
    if signed and len(rs.components(signed)) != 1:
        return False
    return all(marks[i] == -marks[j] for i in signed for j in signed if rs.adjacent(i, j))


def _marks_neighbours_ok(c: Cascade) -> bool:
    rs = c.rs
    marks = rs.marks(cascade_element(c))
    betas = set(c.betas)
    for i, m in enumerate(marks):
        if m != -1:
            continue
        for j in range(rs.rank):
            if rs.adjacent(i, j) and not (marks[j] == 1 and rs.simple_root(j) in betas):
                return False
    return True


def _tap_ok(c: Cascade) -> bool:
    rs = c.rs
    td = tap_data(c)
    if td is None:
        # theta not fundamental: the cascade element is dominant instead
        return not rs.is_theta_fundamental() and all(m >= 0 for m in rs.marks(cascade_element(c)))
    return True


def _multiplicity_symmetry(c: Cascade) -> bool:
    spec = spectrum_of(c)
    betas = set(c.betas)
    ms = Counter(v for g, v in spec.values.items() if g not in betas)
    return all(ms[1 - d] == m for d, m in ms.items())


def _expansion_ok(c: Cascade) -> tuple[bool, str]:
    rs = c.rs
    exp = symmetrised_expansions(c, longest_element(c))
    worst = max(sum(1 for k in ks if k) for ks in exp.values())
    if worst > 4:
        return False, f"{worst} nonzero coefficients"
    if len(c) == rs.rank and all(rs.is_long(b) for b in c.betas):
        betas = set(c.betas)
        for g, ks in exp.items():
            if g not in betas and rs.is_long(g) and sum(1 for k in ks if k) != 4:
                return False, f"{g} expands with {sum(1 for k in ks if k)} terms"
    return True, ""


def _element_checks(s: _Suite, c: Cascade) -> None:
    rs = c.rs
    t = rs.simple_type
    x = cascade_element(c)
    spec = spectrum_of(c)
    s.run("beta(x_K) = 1 on the cascade", lambda: all(rs.pairing(b, x) == 1 for b in c.betas))
    s.run("w0(x_K) = -x_K", lambda: longest_element(c).apply(x) == -x)
    s.run("spectrum value set", lambda: _value_set_ok(c))
    s.run("spectrum within [-1, 2]", lambda: -1 <= spec.min and spec.max <= 2)
    s.run("integral spectrum iff not A_2p", lambda: all(v.denominator == 1 for v in spec.value_set) != t.is_a_even)
    s.run("max value 2 iff theta fundamental", lambda: (spec.max == 2) == rs.is_theta_fundamental())
    s.run("values -1 and 2 only on long roots", lambda: all(rs.is_long(g) for g, v in spec.values.items() if v in (-1, 2)))
    s.run("marks == reference", lambda: rs.marks(x) == fixtures.marks(t))
    s.run("marks shape", lambda: _marks_shape_ok(c))
    s.run("neighbours of a -1 mark", lambda: _marks_neighbours_ok(c))
    s.run("tap data", lambda: _tap_ok(c))
    s.run("value pairing within heisenberg subsets", lambda: len(symmetry_check(c)) == rs.n_positive - len(c))
    s.run("multiplicities of d and 1 - d agree", lambda: _multiplicity_symmetry(c))
    s.run("rho and rho^vee over the cascade", lambda: rho_decompositions(c) is not None)
    s.run("x_K in Q^vee == reference", lambda: qvee_classification(c) == fixtures.in_coroot_lattice(t))
    s.run("x_K in P^vee iff not A_2p", lambda: rs.lattice_member(x, "Pvee") != t.is_a_even)

    def rho_minus_x():
        _na_for_a_even(t)
        return rs.lattice_member(rs.rho_vee - x, "Qvee")

    s.run("rho^vee - x_K in Q^vee", rho_minus_x)
    s.run("trace identity", lambda: frobenius_spectrum_check(c).ok)
    s.run("symmetrised roots have at most 4 cascade terms", lambda: _expansion_ok(c))


# Kostant construction --------------------------------------------------------------------


def _images_ok(c: Cascade) -> tuple[bool, str]:
    rs = c.rs
    t = rs.simple_type
    w = kostant_for_cascade(c).w
    images = fixtures.w_k_images(t)
    if images is not None:
        return w.images() == images, str(w.images())
    word = fixtures.w_k_word(t)
    return w == rs.word([i - 1 for i in word]), "word mismatch"


def _pi0_stable(c: Cascade) -> bool:
    kd = kostant_for_cascade(c)
    zero = {c.rs.simple_root(i) for i in kd.grading.pi(0)}
    return all(kd.w.apply(a) in zero for a in zero)


def _random_z(rs: RootSystem, rng: random.Random, count: int) -> tuple[bool, str]:
    zs = random_admissible(rs, rng, count)
    for z in zs:
        bad = [k for k, v in check_admissible(rs, z).items() if not v]
        if bad:
            return False, f"z = {list(z)}: {', '.join(bad)}"
    return True, ""


def _kostant_checks(s: _Suite, c: Cascade, rng: random.Random, random_count: int) -> None:
    rs = c.rs
    t = rs.simple_type

    def guarded(fn):
        def run():
            _na_for_a_even(t)
            return fn()

        return run

    kd = lambda: kostant_for_cascade(c)  # noqa: E731
    s.run("N(w_K) = D(1) + D(2)", guarded(lambda: kd().w is not None))
    s.run("a_K abelian upper ideal", guarded(lambda: rs.is_abelian(kd().ideal) and rs.is_upper_ideal(kd().ideal)))
    s.run(
        "dim a_K = #D(-1) + #D(2)",
        guarded(lambda: len(kd().ideal) == len(kd().grading.part(-1)) + len(kd().grading.part(2))),
    )
    s.run("minimal and maximal elements", guarded(lambda: min_max_elements(rs, kd().grading, kd().w, kd().ideal).ok))
    s.run("height threshold d_K", guarded(lambda: kd().d > 0))
    s.run("w_K^-1(Pi) = base of D(0) with -theta", guarded(lambda: w_inverse_of_pi(rs, kd().grading, kd().w).ok))
    s.run(
        "theta node == reference",
        guarded(lambda: w_inverse_of_pi(rs, kd().grading, kd().w).j + 1 == fixtures.theta_node(t)),
    )
    s.run("w_K(Pi(0)) inside Pi(0)", guarded(lambda: _pi0_stable(c)))
    s.run("w_K images == reference", guarded(lambda: _images_ok(c)))
    golden = fixtures.w_k_order(t)
    s.run(f"ord_wK == {golden}", guarded(lambda: (kd().w.order() == golden, kd().w.order())))
    s.run(f"random admissible z ({random_count})", lambda: _random_z(rs, rng, random_count))


# involution -------------------------------------------------------------------------------


def _involution_checks(s: _Suite, c: Cascade) -> None:
    t = c.rs.simple_type

    def dims():
        _na_for_a_even(t)
        return z2_grading(c) is not None

    def certificate():
        _na_for_a_even(t)
        nu, _ = regular_certificate(c)
        return all(c.rs.pairing(g, nu) != 0 for g in c.rs.positive_roots)

    s.run("dim g0 = dim b - #K and dim g1 = dim u + #K", dims)
    s.run("regular certificate", certificate)


# orbit ------------------------------------------------------------------------------------


def _orbit_checks(s: _Suite, c: Cascade) -> None:
    rs = c.rs
    t = rs.simple_type
    ref = fixtures.orbit_table(t)
    od = lambda: orbit_data(c)  # noqa: E731
    s.run("wdd == reference", lambda: (list(od().wdd) == ref["wdd"], od().wdd))
    s.run("dim O_K == reference", lambda: (od().dim == ref["dim"], od().dim))
    s.run("dim g(2) == reference", lambda: (od().g2 == ref["g2"], od().g2))
    s.run("dim g(4) == reference", lambda: (od().g4 == ref["g4"], od().g4))

    def g4_vs_ideal():
        _na_for_a_even(t)
        return 2 * od().g4 == len(kostant_for_cascade(c).ideal)

    s.run("2 dim g(4) = dim a_K", g4_vs_ideal)

    def height():
        if rs.is_theta_fundamental():
            return od().height == 4 and len(height_witness(c)) == 5
        return od().height == 2

    s.run("height 4 iff theta fundamental", height)
    s.run("spherical iff type A or C", lambda: od().spherical == (t.family in "AC"))
    s.run(
        "regular subalgebra label",
        lambda: regular_subalgebra_label(c).replace("Ã", "").count("A1") > 0 and od().rank_orbit == len(c),
    )
    if t.is_classical:
        s.run("partition == reference", lambda: (classical_partition(c) == ref["partition"], classical_partition(c)))
        s.run("matrix oracle partition", lambda: partition_oracle(c) == classical_partition(c))
        s.run(
            "dimension from partition",
            lambda: classical_orbit_dimension(t.family, t.rank, partition_oracle(c)) == od().dim,
        )
    else:
        s.run("orbit label == reference", lambda: od().label == ref["label"])


# driver -----------------------------------------------------------------------------------


def verify_type(t: SimpleType | str, seed: int = 0, random_count: int = 100) -> VerifyReport:
    t = SimpleType.parse(t) if isinstance(t, str) else t
    start = time.perf_counter()
    report = VerifyReport(str(t))
    s = _Suite(report)
    rng = random.Random(f"{seed}:{t}")
    try:
        rs = build(t)
        c = compute_cascade(rs)
    except CascadeKitError as e:
        report.checks.append(Check("construction", FAIL, f"{type(e).__name__}: {e}"))
        report.elapsed_ms = (time.perf_counter() - start) * 1000
        return report
    _root_system_checks(s, rs)
    _cascade_checks(s, c, rng)
    _element_checks(s, c)
    _kostant_checks(s, c, rng, random_count)
    _involution_checks(s, c)
    _orbit_checks(s, c)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def verify_all(max_rank: int = 12, seed: int = 0, random_count: int = 100) -> list[VerifyReport]:
    return [verify_type(t, seed, random_count) for t in canonical_types(max_rank)]


def x_k_strings(x: WeightVector) -> list[str]:
    return [f"{v.numerator}/{v.denominator}" for v in x]
