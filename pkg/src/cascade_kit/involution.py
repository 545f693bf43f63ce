"""The inner involution attached to the cascade element (integral cases only)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cascade import Cascade
from .cascade_element import cascade_element
from .errors import NotApplicable, require
from .root_system import Root, WeightVector


@dataclass(frozen=True)
class Z2Grading:
    even: frozenset[Root]  # roots (of both signs) with even value
    odd: frozenset[Root]
    dim_g0: int
    dim_g1: int
    counts: dict[int, int]  # value -> number of roots (both signs) with that value

    def to_json(self) -> dict:
        return {"dim_g0": self.dim_g0, "dim_g1": self.dim_g1, "counts": {str(k): v for k, v in sorted(self.counts.items())}}


def z2_grading(c: Cascade) -> Z2Grading:
    rs = c.rs
    if rs.simple_type.is_a_even:
        raise NotApplicable(f"not applicable: type A_{{2p}} ({rs.simple_type})")
    x = cascade_element(c)
    vals = rs.values(x)
    require(all(v.denominator == 1 for v in vals), "spectrum is not integral")
    counts: dict[int, int] = {}
    even, odd = set(), set()
    for g, v in zip(rs.positive_roots, vals):
        v = int(v)
        neg = tuple(-a for a in g)
        for root, val in ((g, v), (neg, -v)):
            counts[val] = counts.get(val, 0) + 1
            (even if val % 2 == 0 else odd).add(root)
    dim_g0 = rs.rank + len(even)
    dim_g1 = len(odd)
    b = rs.rank + rs.n_positive
    require(dim_g0 == b - len(c), "dim g0 differs from dim b - #K")
    require(dim_g1 == rs.n_positive + len(c), "dim g1 differs from dim u + #K")
    require(all(abs(k) <= 2 for k in counts), "unexpected values")
    pos = Counter(int(v) for v in vals)
    require(pos[-2] == 0 and pos[-1] == pos[2], "#D+(-1) differs from #D+(2)")
    require(pos[0] == pos[1] - len(c), "#D+(0) differs from #D+(1) - #K")
    return Z2Grading(frozenset(even), frozenset(odd), dim_g0, dim_g1, counts)


def regular_certificate(c: Cascade, max_base: int = 50) -> tuple[WeightVector, int]:
    """nu = sum M^i beta_{i+1}, with the smallest M >= 3 that pairs non-trivially with every root.

    M = 3 works for every type except G2, which needs M = 4.
    """
    rs = c.rs
    B = np.array(c.betas, dtype=np.int64)
    pair = rs.pos @ rs._form_int @ B.T  # scale * (gamma, beta_i)
    require(bool((pair != 0).any(axis=1).all()), "some positive root is orthogonal to the whole cascade")
    for M in range(3, max_base + 1):
        weights = np.array([M**i for i in range(len(c))], dtype=object)
        vals = pair.astype(object) @ weights
        if all(v != 0 for v in vals):
            nu = WeightVector([0] * rs.rank)
            for i, b in enumerate(c.betas):
                nu = nu + WeightVector(b) * Fraction(M**i)
            return nu, M
    raise RuntimeError("no regular element found in the span of the cascade")
