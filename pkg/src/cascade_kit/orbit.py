"""The nilpotent orbit of e_K = sum of root vectors over the cascade."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from . import classical as cl
from . import fixtures
from .cascade import Cascade
from .cascade_element import cascade_element, tap_data
from .errors import NoChain, NotClassical, require
from .kostant_ideal import anti_dominant_walk, kostant_for_cascade
from .linalg import rank
from .root_system import Root, WeightVector


def characteristic_and_wdd(c: Cascade) -> tuple[WeightVector, list[int], list[int]]:
    """Dominant conjugate of h = 2 x_K, its weighted Dynkin diagram and the reduced word used.

    x_K is sent to -x_K by the longest element, so the dominant conjugate of h is
    -w(h) for w the shortest element making h anti-dominant.
    """
    rs = c.rs
    h = cascade_element(c) * 2
    w, word, image = anti_dominant_walk(rs, h)
    dominant = -image
    labels = rs.marks(dominant)
    require(all(v.denominator == 1 and v >= 0 for v in labels), "labels are not non-negative integers")
    require(rs.word(word) == w, "recorded word does not reproduce w")
    labels = [int(v) for v in labels]
    if not rs.simple_type.is_a_even:
        wk = kostant_for_cascade(c).w
        wt = wk.apply(rs.theta)
        j = next(i for i, v in enumerate(wt) if v)
        require(tuple(-v for v in wt) == rs.simple_root(j), "w_K(theta) is not a negative simple root")
        require(dominant == -(wk.apply(h)), "dominant characteristic is not -w_K(h)")
        require(dominant == rs.fundamental_coweight(j) * 2, "dominant characteristic is not twice a fundamental coweight")
        require(labels == [2 if i == j else 0 for i in range(rs.rank)], "labels are not a single 2 at the theta node")
    else:
        require(sorted(labels) == [0] * (rs.rank - 2) + [1, 1], "A_{2p} labels are not two 1s")
    return dominant, labels, word


def orbit_height(c: Cascade) -> int:
    """Largest eigenvalue of ad h on g."""
    vals = c.rs.values(cascade_element(c) * 2)
    return int(max(max(vals), -min(vals)))


def height_witness(c: Cascade) -> list[Root]:
    """Chain -theta + alpha, ..., theta - alpha adding theta and the tap roots one at a time.

    Each partial sum is a root, so (ad e_K)^4 can move the first root space to the last.
    """
    rs = c.rs
    td = tap_data(c)
    if td is None:
        raise NoChain("theta is not fundamental")
    alpha = rs.simple_root(td.alpha)
    start = tuple(a - t for a, t in zip(alpha, rs.theta))
    steps = [rs.theta]
    for i, ci in zip(td.J, td.c):
        steps += [c.betas[i]] * int(ci)
    require(len(steps) == 4, "tap multiset does not have four elements")
    for perm in itertools.permutations(steps):
        chain, cur = [start], start
        for s in perm:
            cur = tuple(a + b for a, b in zip(cur, s))
            if not rs.is_root(cur):
                break
            chain.append(cur)
        else:
            require(chain[-1] == tuple(t - a for t, a in zip(rs.theta, alpha)), "chain does not end at theta - alpha")
            return chain
    raise NoChain(f"no ordering of the tap multiset stays inside the root system of {rs.simple_type}")


def grading_counts(c: Cascade) -> Counter:
    """Dimension of g(k) for the grading by ad h, h = 2 x_K."""
    rs = c.rs
    vals = rs.values(cascade_element(c) * 2)
    out = Counter()
    for v in vals:
        require(v.denominator == 1, "h has non-integral eigenvalues")
        out[int(v)] += 1
        out[-int(v)] += 1
    out[0] += rs.rank
    return out


def orbit_dimension(c: Cascade) -> dict[str, int]:
    rs = c.rs
    g = grading_counts(c)
    dim = rs.dim - g[0] - g[1]
    return {"dim": dim, "g0": g[0], "g1": g[1], "g2": g[2], "g4": g[4]}


def regular_subalgebra_label(c: Cascade) -> str:
    """Type of the subalgebra spanned by the sl2-triples of the cascade roots."""
    m = len(c)
    short = sum(1 for n in c.nodes if n.short)
    longs = m - short
    parts = []
    if longs:
        parts.append("A1" if longs == 1 else f"{longs}A1")
    if short:
        parts.append("Ã1" if short == 1 else f"{short}Ã1")
    return "+".join(parts)


# classical partitions ---------------------------------------------------------


def _eps(c: Cascade, v) -> tuple:
    t = c.rs.simple_type
    return cl.alpha_to_eps(t.family, t.rank, v)


def classical_partition(c: Cascade) -> list[int]:
    """Jordan type of e_K; equal to the sl2 weight decomposition of h on the defining representation."""
    return partition_from_characteristic(c)


def partition_from_characteristic(c: Cascade) -> list[int]:
    """Jordan type of e_K read off from the weights of h on the defining representation."""
    t = c.rs.simple_type
    if not t.is_classical:
        raise NotClassical(str(t))
    h = _eps(c, cascade_element(c) * 2)
    weights = [cl.eps_form(t.family, w, h) for w in cl.diagonal_weights(t.family, t.rank)]
    pool = Counter(weights)
    parts = []
    while pool:
        top = max(pool)
        require(top.denominator == 1 and top >= 0, "weights of h are not symmetric integers")
        string = [top - 2 * k for k in range(int(top) + 1)]
        for v in string:
            require(pool[v] > 0, "weights of h do not form sl2 strings")
            pool[v] -= 1
            if not pool[v]:
                del pool[v]
        parts.append(int(top) + 1)
    return sorted(parts, reverse=True)


def e_k_matrix(c: Cascade) -> list[list[int]]:
    t = c.rs.simple_type
    if not t.is_classical:
        raise NotClassical(str(t))
    N = cl.defining_dim(t.family, t.rank)
    total = [[0] * N for _ in range(N)]
    for b in c.betas:
        m = cl.root_vector(t.family, t.rank, _eps(c, b))
        total = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(total, m)]
    return total


def _matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def power_ranks(m: list[list[int]]) -> list[int]:
    """rank(m^0), rank(m^1), ... until it reaches 0."""
    out = [len(m)]
    p = m
    while out[-1]:
        out.append(rank(p))
        p = _matmul(p, m)
    return out


def partition_from_ranks(ranks: list[int]) -> list[int]:
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]  # parts >= k
    parts = []
    for k, cnt in enumerate(at_least, start=1):
        nxt = at_least[k] if k < len(at_least) else 0
        parts += [k] * (cnt - nxt)
    return sorted(parts, reverse=True)


def partition_oracle(c: Cascade) -> list[int]:
    """Jordan type of an explicit matrix e_K in the defining representation."""
    t = c.rs.simple_type
    ranks = power_ranks(e_k_matrix(c))
    if t.family in "BD":
        N = t.rank
        if t.family == "B":
            exp1 = N if N % 2 == 0 else N + 1
            exp2 = (N + 1) // 2
        else:
            exp1 = N if N % 2 == 0 else N - 1
            exp2 = N // 2
        require(ranks[1] == exp1 and ranks[2] == exp2, f"ranks of e_K and its square are {ranks[1:3]}")
    return partition_from_ranks(ranks)


def dual_partition(p: list[int]) -> list[int]:
    return [sum(1 for x in p if x >= k) for k in range(1, (max(p) if p else 0) + 1)]


def classical_orbit_dimension(family: str, n: int, p: list[int]) -> int:
    """Dimension of the nilpotent orbit with Jordan type p."""
    N = cl.defining_dim(family, n)
    s = sum(x * x for x in dual_partition(p))
    odd = sum(1 for x in p if x % 2)
    if family == "A":
        return N * N - s
    if family in "BD":
        return N * (N - 1) // 2 - (s - odd) // 2
    return N * (N + 1) // 2 - (s + odd) // 2


# summary -------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitData:
    wdd: tuple[int, ...]
    dim: int
    g2: int
    g4: int
    height: int
    spherical: bool
    regular_subalgebra_label: str
    complexity: int
    rank_orbit: int
    partition: tuple[int, ...] | None = None
    label: str | None = None

    def to_json(self) -> dict:
        out = {
            "wdd": list(self.wdd),
            "dim": self.dim,
            "g2": self.g2,
            "g4": self.g4,
            "height": self.height,
            "spherical": self.spherical,
            "partition": None if self.partition is None else list(self.partition),
            "label": self.label,
            "regular_subalgebra": self.regular_subalgebra_label,
            "complexity": self.complexity,
            "rank_orbit": self.rank_orbit,
        }
        return out


def exceptional_label(c: Cascade, wdd: list[int]) -> str | None:
    """Bala-Carter label, looked up from the reference table by weighted Dynkin diagram."""
    row = fixtures.orbit_table(c.rs.simple_type)
    return row.get("label") if row["wdd"] == list(wdd) else None


def orbit_data(c: Cascade) -> OrbitData:
    _, wdd, _ = characteristic_and_wdd(c)
    dims = orbit_dimension(c)
    height = orbit_height(c)
    t = c.rs.simple_type
    partition = tuple(partition_from_characteristic(c)) if t.is_classical else None
    label = None if t.is_classical else exceptional_label(c, wdd)
    require(height in (2, 4), f"height {height} is neither 2 nor 4")
    require((height == 4) == c.rs.is_theta_fundamental(), "height 4 does not match theta being fundamental")
    if not t.is_a_even:
        require(2 * dims["g4"] == len(kostant_for_cascade(c).ideal), "2 dim g(4) differs from dim a_K")
    return OrbitData(
        wdd=tuple(wdd),
        dim=dims["dim"],
        g2=dims["g2"],
        g4=dims["g4"],
        height=height,
        spherical=height <= 3,
        regular_subalgebra_label=regular_subalgebra_label(c),
        complexity=2 * dims["g4"],
        rank_orbit=len(c),
        partition=partition,
        label=label,
    )
