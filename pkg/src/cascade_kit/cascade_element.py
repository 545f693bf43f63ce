"""The cascade element x_K = (1/2) * sum of the cascade coroots, and its spectrum."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cascade import Cascade, heisenberg_index
from .errors import DecompositionMismatch, require
from .root_system import Root, RootSystem, WeightVector, build

@lru_cache(maxsize=None)
def cascade_element(c: Cascade) -> WeightVector:
    rs = c.rs
    total = WeightVector.zero(rs.rank)
    for b in c.betas:
        total = total + rs.coroot(b)
    return total / 2


@dataclass(frozen=True)
class Spectrum:
    """Values gamma(x) on the positive roots."""

    values: dict[Root, Fraction]

    @property
    def multiset(self) -> Counter:
        return Counter(self.values.values())

    @property
    def value_set(self) -> set[Fraction]:
        return set(self.values.values())

    @property
    def min(self) -> Fraction:
        return min(self.values.values())

    @property
    def max(self) -> Fraction:
        return max(self.values.values())

    def level(self, v) -> frozenset[Root]:
        return frozenset(g for g, x in self.values.items() if x == v)

    def to_json(self) -> dict[str, int]:
        return {_q(k): m for k, m in sorted(self.multiset.items())}


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def spectrum(rs: RootSystem, x) -> Spectrum:
    return Spectrum(dict(zip(rs.positive_roots, rs.values(x))))


def simple_marks(rs: RootSystem, x) -> list[Fraction]:
    return rs.marks(x)


def spectrum_of(c: Cascade) -> Spectrum:
    return spectrum(c.rs, cascade_element(c))


# tap data --------------------------------------------------------------------


@dataclass(frozen=True)
class TapData:
    alpha: int  # 0-based index of the unique simple root not orthogonal to theta
    J: tuple[int, ...]  # cascade indices with (alpha, beta_i) < 0
    c: tuple[Fraction, ...]  # (alpha, alpha) / (beta_i, beta_i) for i in J


def tap_data(c: Cascade) -> TapData | None:
    """None unless theta is a fundamental weight."""
    rs = c.rs
    if not rs.is_theta_fundamental():
        return None
    (a,) = [i for i in range(rs.rank) if rs.pairing(rs.simple_root(i), rs.theta) != 0]
    alpha = rs.simple_root(a)
    J = tuple(i for i, b in enumerate(c.betas) if rs.pairing(alpha, b) < 0)
    cs = tuple(rs.length2(alpha) / rs.length2(c.betas[i]) for i in J)
    x = cascade_element(c)
    require(sum(cs) == 3, "tap coefficients do not sum to 3")
    combo = WeightVector(rs.theta)
    for i, ci in zip(J, cs):
        combo = combo - WeightVector(c.betas[i]) * ci
    require(combo / 2 == WeightVector(alpha), "tap root is not (theta - sum c_i beta_i) / 2")
    require(rs.pairing(alpha, x) == -1, "tap root does not take value -1")
    require(rs.pairing(WeightVector(rs.theta) - WeightVector(alpha), x) == 2, "theta - alpha does not take value 2")
    require(0 not in J and len(J) <= 3, "tap index set is malformed")
    require(rs.is_long(alpha) and rs.theta[a] == 2, "tap root is not long with coefficient 2 in theta")
    return TapData(a, J, cs)


# value pairing ---------------------------------------------------------------


def symmetry_check(c: Cascade, x=None) -> list[tuple[Root, Root]]:
    """Pair every non-cascade root with its partner beta_j - gamma in the same Heisenberg subset.

    The two values add up to 1.
    """
    rs = c.rs
    x = cascade_element(c) if x is None else x
    spec = spectrum(rs, x)
    where = heisenberg_index(c)
    betas = set(c.betas)
    pairs = []
    for g, j in where.items():
        if g in betas:
            continue
        beta = c.betas[j]
        partner = tuple(b - a for a, b in zip(g, beta))
        require(partner in c.nodes[j].heisenberg, f"{beta} - {g} is not in the same Heisenberg subset")
        require(spec.values[g] + spec.values[partner] == 1, f"values of {g} and {partner} do not add to 1")
        pairs.append((g, partner))
    return pairs


# subtype Coxeter numbers and the rho identities ------------------------------


def subtype_coxeter_numbers(c: Cascade) -> list[tuple[int, int]]:
    """(h, h*) for each cascade subalgebra, computed two ways and cross-checked."""
    rs = c.rs
    out = []
    for node in c.nodes:
        model = build(node.subtype).coxeter_numbers()
        sub = rs.subsystem_roots(node.support)
        rho_sub = WeightVector(np.array(sub).sum(axis=0).tolist()) / 2
        direct = (1 + sum(node.beta), 1 + rs.pairing(rho_sub, rs.coroot(node.beta)))
        if direct != model:
            raise DecompositionMismatch(f"node {node.index + 1}: {direct} != {model} for {node.subtype}")
        out.append(model)
    return out


@dataclass(frozen=True)
class RhoDecomposition:
    rho2_coeffs: tuple[int, ...]  # 2 rho = sum a_j beta_j
    rho2_vee_coeffs: tuple[int, ...]  # 2 rho^vee = sum b_j beta_j^vee


def _expand(rs: RootSystem, betas: list[Root], v: WeightVector, coroots: bool) -> list[Fraction]:
    out = []
    for b in betas:
        basis = rs.coroot(b) if coroots else WeightVector(b)
        out.append(rs.pairing(v, basis) / rs.pairing(basis, basis))
    return out


def rho_decompositions(c: Cascade) -> RhoDecomposition:
    rs = c.rs
    nums = subtype_coxeter_numbers(c)
    a = tuple(hd - 1 for _, hd in nums)
    b = tuple(h - 1 for h, _ in nums)
    two_rho = rs.rho * 2
    two_rho_vee = rs.rho_vee * 2
    lhs = WeightVector.zero(rs.rank)
    lhs_vee = WeightVector.zero(rs.rank)
    for beta, ai, bi in zip(c.betas, a, b):
        lhs = lhs + WeightVector(beta) * ai
        lhs_vee = lhs_vee + rs.coroot(beta) * bi
    if lhs != two_rho or lhs_vee != two_rho_vee:
        raise DecompositionMismatch(f"rho is not the expected combination of cascade roots in {rs.simple_type}")
    # the orthogonal expansion must agree with the Coxeter-number one
    if _expand(rs, c.betas, two_rho, False) != list(a):
        raise DecompositionMismatch("orthogonal expansion of 2 rho disagrees")
    return RhoDecomposition(a, b)


def qvee_classification(c: Cascade, x=None) -> bool:
    x = cascade_element(c) if x is None else x
    return c.rs.lattice_member(x, "Qvee")


# Frobenius trace identity -------------------------------------------------------


@dataclass(frozen=True)
class FrobeniusReport:
    multiset: Counter  # {0}^#K together with the spectrum on positive roots
    symmetric: bool  # multiplicity of v equals that of 1 - v
    trace: Fraction
    half_dim_plus_k: Fraction  # (dim u + #K) / 2
    two_rho_at_x: Fraction
    from_coxeter: int  # sum of (h*_j - 1)

    @property
    def ok(self) -> bool:
        return self.symmetric and self.trace == self.half_dim_plus_k == self.two_rho_at_x == self.from_coxeter


def frobenius_spectrum_check(c: Cascade, x=None) -> FrobeniusReport:
    rs = c.rs
    x = cascade_element(c) if x is None else x
    ms = spectrum(rs, x).multiset
    ms[Fraction(0)] += len(c)
    symmetric = all(ms.get(1 - v, 0) == m for v, m in ms.items())
    trace = sum((v * m for v, m in ms.items()), Fraction(0))
    cox = sum(hd - 1 for _, hd in subtype_coxeter_numbers(c))
    return FrobeniusReport(
        multiset=ms,
        symmetric=symmetric,
        trace=trace,
        half_dim_plus_k=Fraction(rs.n_positive + len(c), 2),
        two_rho_at_x=rs.pairing(rs.rho * 2, x),
        from_coxeter=cox,
    )


# expansion of -w0-symmetrised roots in the cascade basis ---------------------------


def symmetrised_expansion(c: Cascade, w0, g: Root) -> list[Fraction]:
    """Coefficients k_i with (g - w0 g) / 2 = sum k_i beta_i."""
    return symmetrised_expansions(c, w0)[g]


def symmetrised_expansions(c: Cascade, w0) -> dict[Root, list[Fraction]]:
    """The same expansion for every positive root at once, checked exactly."""
    rs = c.rs
    pos = rs.pos
    twice = pos - rs.image_rows(w0)  # 2 * gbar
    B = np.array(c.betas, dtype=np.int64)
    norms = np.einsum("ij,jk,ik->i", B, rs._form_int, B)  # scale * (beta, beta)
    pair = twice @ rs._form_int @ B.T  # 2 * scale * (gbar, beta_i)
    # k_i = pair / (2 * norms); check sum k_i beta_i == gbar with common denominator
    den = 2 * int(np.lcm.reduce(norms))
    knum = pair * (den // (2 * norms))
    require(np.array_equal(knum @ B * 2, twice * den), "symmetrised roots are not in the span of the cascade")
    out = {}
    for g, row in zip(rs.positive_roots, knum.tolist()):
        out[g] = [Fraction(k, den) for k in row]
    return out


def values_array(rs: RootSystem, x) -> tuple[np.ndarray, int]:
    return rs.scaled_values(x)
