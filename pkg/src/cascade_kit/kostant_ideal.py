"""Gradings by admissible elements, the minimal element w_z and the abelian ideal a_z.

An element z is admissible when every positive root takes a value in
{-1, 0, 1, 2} on it.  w_z is the shortest Weyl group element taking z to
the anti-dominant chamber; its inversion set is the set of positive roots
with positive value on z.  The ideal is a_z = w_z(D(-1)) + w_z(-D(2)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cascade import Cascade
from .cascade_element import cascade_element
from .errors import NotAdmissible, NotApplicable, PreconditionFailed, require
from .linalg import rank
from .root_system import Root, RootSystem, WeightVector, WeylElement

GRADES = (-1, 0, 1, 2)


@dataclass(frozen=True)
class ZGrading:
    z: WeightVector
    values: tuple[int, ...]  # per positive root, in the order of rs.positive_roots
    parts: dict[int, frozenset[Root]]
    pi_parts: dict[int, frozenset[int]]  # simple roots by value, 0-based indices

    def part(self, k: int) -> frozenset[Root]:
        return self.parts.get(k, frozenset())

    def pi(self, k: int) -> frozenset[int]:
        return self.pi_parts.get(k, frozenset())


def grade(rs: RootSystem, z) -> ZGrading:
    z = WeightVector(z)
    num, den = rs.scaled_values(z)
    bad = (num % den != 0) | (num < -den) | (num > 2 * den)
    if bad.any():
        k = int(np.nonzero(bad)[0][0])
        raise NotAdmissible(rs.positive_roots[k], Fraction(int(num[k]), den))
    values = tuple((num // den).tolist())
    parts: dict[int, set] = {k: set() for k in GRADES}
    for g, v in zip(rs.positive_roots, values):
        parts[v].add(g)
    pi: dict[int, set] = {k: set() for k in GRADES}
    for i in range(rs.rank):
        pi[values[i]].add(i)
    return ZGrading(
        z=z,
        values=values,
        parts={k: frozenset(v) for k, v in parts.items()},
        pi_parts={k: frozenset(v) for k, v in pi.items()},
    )


def grade_from_marks(rs: RootSystem, marks) -> ZGrading:
    return grade(rs, rs.coweight_from_marks(marks))


# walking to the anti-dominant chamber -----------------------------------------


def anti_dominant_walk(rs: RootSystem, z) -> tuple[WeylElement, list[int], WeightVector]:
    """Greedy reflection walk; returns (w, reduced word, w(z)).

    At each step the lowest-indexed simple root with positive value is
    reflected.  Every step lengthens w by one, so the word is reduced and w is
    the unique shortest element carrying z into the closed anti-dominant chamber.
    """
    z = WeightVector(z)
    a, den = rs.marks_scaled(z)
    A = rs.cartan
    M = np.eye(rs.rank, dtype=np.int64)
    word: list[int] = []
    bound = rs.n_positive
    while True:
        j = next((i for i, v in enumerate(a) if v > 0), None)
        if j is None:
            break
        aj = a[j]
        a = [a[i] - A[i][j] * aj for i in range(rs.rank)]
        M[j, :] -= np.array([A[k][j] for k in range(rs.rank)], dtype=np.int64) @ M
        word.append(j)
        require(len(word) <= bound, "anti-dominant walk did not terminate")
    w = WeylElement(M)
    dz, zi = z.denominator, np.array([int(c * z.denominator) for c in z], dtype=np.int64)
    img = M @ zi
    require(np.array_equal(rs._form_int @ img * den, np.array(a, dtype=np.int64) * rs.scale * dz),
            "walk bookkeeping is inconsistent")
    return w, word[::-1], WeightVector(Fraction(int(v), dz) for v in img)


def anti_dominantize(rs: RootSystem, z) -> WeylElement:
    w, _, _ = anti_dominant_walk(rs, z)
    num, _ = rs.scaled_values(z)
    positive = frozenset(rs.positive_roots[k] for k in np.nonzero(num > 0)[0])
    require(rs.inversion_set(w) == positive, "inversion set differs from the roots positive on z")
    return w


# the abelian ideal ----------------------------------------------------------------


def abelian_ideal(rs: RootSystem, grading: ZGrading, w: WeylElement) -> frozenset[Root]:
    low = np.array(sorted(grading.part(-1)), dtype=np.int64).reshape(-1, rs.rank)
    top = np.array(sorted(grading.part(2)), dtype=np.int64).reshape(-1, rs.rank)
    imgs = np.vstack([rs.image_rows(w, low), rs.image_rows(w, -top)])
    ids = rs.ids(imgs)
    require(bool((ids >= 0).all()), "image of the ideal generators is not positive")
    ideal = frozenset(rs.positive_roots[k] for k in ids)
    require(rs.is_upper_ideal(ideal), "a_z is not an upper ideal")
    require(rs.is_abelian(ideal), "a_z is not abelian")
    return ideal


@dataclass(frozen=True)
class MinMaxReport:
    minimal: frozenset[Root]
    expected_minimal: frozenset[Root]
    maximal_complement: frozenset[Root]
    expected_maximal_complement: frozenset[Root]

    @property
    def ok(self) -> bool:
        return self.minimal == self.expected_minimal and self.maximal_complement == self.expected_maximal_complement


def minimal_elements(rs: RootSystem, roots) -> frozenset[Root]:
    mask = rs.mask(roots)
    lo, hi = rs.covers[:, 0], rs.covers[:, 1]
    covered = np.zeros(rs.n_positive, dtype=bool)
    covered[hi[mask[lo] & mask[hi]]] = True
    return frozenset(g for g in roots if not covered[rs.index(g)])


def maximal_elements(rs: RootSystem, roots) -> frozenset[Root]:
    mask = rs.mask(roots)
    lo, hi = rs.covers[:, 0], rs.covers[:, 1]
    covering = np.zeros(rs.n_positive, dtype=bool)
    covering[lo[mask[lo] & mask[hi]]] = True
    return frozenset(g for g in roots if not covering[rs.index(g)])


def min_max_elements(rs: RootSystem, grading: ZGrading, w: WeylElement, ideal) -> MinMaxReport:
    ideal = frozenset(ideal)
    complement = frozenset(rs.positive_roots) - ideal
    exp_min = frozenset(w.apply(rs.simple_root(i)) for i in grading.pi(-1))
    exp_max = frozenset(tuple(-v for v in w.apply(rs.simple_root(i))) for i in grading.pi(1))
    return MinMaxReport(minimal_elements(rs, ideal), exp_min, maximal_elements(rs, complement), exp_max)


def d_threshold(rs: RootSystem, grading: ZGrading, w: WeylElement, ideal) -> int:
    """Boundary height d with ideal = {ht >= d}; raises if any of the height statements fail."""
    theta = rs.theta
    d = 1 + sum(theta[i] for i in range(rs.rank) if grading.values[i] >= 0)
    d_alt = sum(theta) + 1 - sum(theta[i] for i in grading.pi(-1))
    require(d == d_alt, "the two expressions for d disagree")
    ideal = frozenset(ideal)
    require(ideal == frozenset(g for g in rs.positive_roots if sum(g) >= d), "ideal is not the set of roots of height >= d")
    winv = w.inverse()
    simple_minus = {rs.simple_root(i) for i in grading.pi(-1)}
    simple_plus = {rs.simple_root(i) for i in grading.pi(1)}
    for g in rs.positive_roots:
        pre = winv.apply(g)
        require((sum(g) == d) == (pre in simple_minus), f"height-{d} statement fails at {g}")
        neg = tuple(-v for v in pre)
        require((sum(g) == d - 1) == (neg in simple_plus), f"height-{d - 1} statement fails at {g}")
    h = sum(theta) + 1
    if grading.pi(0):
        require(2 * d > h + 2, "d should exceed h/2 + 1")
    else:
        require(2 * d == h + 2, "d should equal h/2 + 1")
    return d


@dataclass(frozen=True)
class WInverseReport:
    base: frozenset[Root]
    preimage: frozenset[Root]  # w^{-1}(Pi)
    expected: frozenset[Root]  # base together with -theta
    j: int  # w(theta) = -alpha_j, 0-based
    coweight_ok: bool  # -w(z) is the fundamental coweight of alpha_j

    @property
    def ok(self) -> bool:
        return self.preimage == self.expected and self.coweight_ok


def w_inverse_of_pi(rs: RootSystem, grading: ZGrading, w: WeylElement) -> WInverseReport:
    zero = sorted(grading.part(0))
    if rs.pairing(rs.theta, grading.z) != 1:
        raise PreconditionFailed("theta(z) must be 1")
    got = rank([list(g) for g in zero]) if zero else 0
    if got != rs.rank - 1:
        raise PreconditionFailed(f"Delta_z(0) has rank {got}, expected {rs.rank - 1}")
    base = frozenset(rs.base_of(zero))
    for g in base:
        require(w.apply(g) in set(rs.simple_roots), f"w({g}) is not simple")
    wt = w.apply(rs.theta)
    require(tuple(-v for v in wt) in set(rs.simple_roots), "w(theta) is not a negative simple root")
    j = next(i for i, v in enumerate(wt) if v)
    winv = w.inverse()
    preimage = frozenset(winv.apply(a) for a in rs.simple_roots)
    coweight_ok = -w.apply(grading.z) == rs.fundamental_coweight(j)
    expected = base | {tuple(-v for v in rs.theta)}
    return WInverseReport(base, preimage, expected, j, coweight_ok)


# the cascade case ------------------------------------------------------------------


@dataclass(frozen=True)
class KostantData:
    grading: ZGrading
    w: WeylElement
    word: tuple[int, ...]
    ideal: frozenset[Root]
    d: int


@lru_cache(maxsize=None)
def kostant_for_cascade(c: Cascade) -> KostantData:
    rs = c.rs
    if rs.simple_type.is_a_even:
        raise NotApplicable(f"not applicable: type A_{{2p}} ({rs.simple_type})")
    x = cascade_element(c)
    g = grade(rs, x)
    w, word, _ = anti_dominant_walk(rs, x)
    require(rs.inversion_set(w) == g.part(1) | g.part(2), "N(w_K) differs from D(1) + D(2)")
    ideal = abelian_ideal(rs, g, w)
    d = d_threshold(rs, g, w, ideal)
    return KostantData(g, w, tuple(word), ideal, d)


def w_k_images(c: Cascade) -> list[Root]:
    return kostant_for_cascade(c).w.images()


# random admissible elements ----------------------------------------------------------


def random_admissible(rs: RootSystem, rng: random.Random, count: int = 100, max_batches: int = 2000) -> list[WeightVector]:
    """Admissible z = sum c_i * (fundamental coweight i) with c_i in {-1, 0, 1}.

    Candidates are drawn in batches with a per-batch density so that both sparse and
    dense sign patterns occur; non-admissible candidates are rejected.
    """
    pos = rs.pos
    out: list[WeightVector] = []
    seed = rng.getrandbits(64)
    gen = np.random.default_rng(seed)
    for _ in range(max_batches):
        p = rng.uniform(0.05, 0.6)
        size = 256
        nz = gen.random((size, rs.rank)) < p
        sign = np.where(gen.random((size, rs.rank)) < 0.5, -1, 1)
        cand = nz * sign
        vals = cand @ pos.T
        ok = ((vals >= -1) & (vals <= 2)).all(axis=1)
        for row in cand[ok]:
            out.append(rs.coweight_from_marks([int(v) for v in row]))
            if len(out) == count:
                return out
    raise RuntimeError("could not find enough admissible elements")


def check_admissible(rs: RootSystem, z) -> dict[str, bool]:
    """Checks that hold for every admissible z: inversion set, closure, ideal shape."""
    g = grade(rs, z)
    w = anti_dominantize(rs, z)
    out = {
        "inversion_set": rs.inversion_set(w) == g.part(1) | g.part(2),
        "closed_plus": rs.is_closed(g.part(1) | g.part(2)),
        "closed_minus": rs.is_closed(g.part(-1) | g.part(0)),
    }
    ideal = abelian_ideal(rs, g, w)
    out["ideal_abelian"] = rs.is_abelian(ideal) and rs.is_upper_ideal(ideal)
    out["ideal_size"] = len(ideal) == len(g.part(-1)) + len(g.part(2))
    base = rs.base_of(sorted(g.part(0)))
    simple = set(rs.simple_roots)
    out["base_to_simple"] = all(w.apply(b) in simple for b in base)
    if rs.pairing(rs.theta, g.z) == 1:
        out["theta_to_minus_simple"] = tuple(-v for v in w.apply(rs.theta)) in simple
    return out
