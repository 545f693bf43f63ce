"""Reference data: published cascades, marks, Hasse diagrams, w_K tables and orbit tables.

Exceptional data is read from ``data/exceptional.json``.  Classical data is
generated from closed formulas in eps coordinates and converted to
simple-root coordinates with :mod:`cascade_kit.classical`.  Nothing here is
computed from the root-system machinery, so it can serve as an oracle.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import comb, lcm

from . import classical as cl
from .simple_type import SimpleType


@lru_cache(maxsize=None)
def _exceptional() -> dict:
    text = resources.files("cascade_kit").joinpath("data/exceptional.json").read_text()
    return json.loads(text)


def _e(t: SimpleType) -> dict:
    return _exceptional()[str(t)]


def _alpha(t: SimpleType, v) -> tuple[int, ...]:
    c = cl.eps_to_alpha(t.family, t.rank, v)
    assert all(isinstance(x, int) for x in c), (t, v, c)
    return c


def theta(t: SimpleType) -> tuple[int, ...]:
    if not t.is_classical:
        return tuple(_e(t)["theta"])
    n, d = t.rank, cl.ambient_dim(t.family, t.rank)
    if t.family == "A":
        v = cl.vadd(cl.eps(1, d), cl.eps(n + 1, d, -1))
    elif t.family == "C":
        v = cl.eps(1, d, 2)
    else:
        v = cl.vadd(cl.eps(1, d), cl.eps(2, d))
    return _alpha(t, v)


def cascade(t: SimpleType) -> list[tuple[int, ...]]:
    """Cascade roots in the published numbering."""
    if not t.is_classical:
        return [tuple(b) for b in _e(t)["cascade"]]
    f, n = t.family, t.rank
    d = cl.ambient_dim(f, n)
    if f == "A":
        vs = [cl.vadd(cl.eps(i, d), cl.eps(n + 2 - i, d, -1)) for i in range(1, (n + 1) // 2 + 1)]
    elif f == "C":
        vs = [cl.eps(i, d, 2) for i in range(1, n + 1)]
    else:
        vs = []
        for i in range(1, n // 2 + 1):
            vs.append(cl.vadd(cl.eps(2 * i - 1, d), cl.eps(2 * i, d)))
            vs.append(cl.vadd(cl.eps(2 * i - 1, d), cl.eps(2 * i, d, -1)))
        if f == "B" and n % 2:
            vs.append(cl.eps(n, d))
    return [_alpha(t, v) for v in vs]


def hasse(t: SimpleType) -> list[tuple[str, int | None]]:
    """(label, parent) per cascade node, parents 1-based in the published numbering."""
    if not t.is_classical:
        return [(lab, p) for lab, p in _e(t)["hasse"]]
    f, n = t.family, t.rank
    if f in "AC":
        step = 2 if f == "A" else 1
        ranks = list(range(n, 0, -step))
        return [(f"{f}{r}", i if i else None) for i, r in enumerate(ranks)]
    out: list[tuple[str, int | None]] = []
    half = n // 2
    for i in range(1, half + 1):
        parent = 2 * i - 3 if i > 1 else None
        sub = n + 2 - 2 * i
        if f == "D" and n % 2 == 0 and i == half:
            # the D4 at the bottom splits into three A1 leaves
            out.append(("A1", parent))
            out.append(("A1", parent))
            continue
        out.append((f"{f}{sub}", parent))
        out.append(("A1", 2 * i - 1))
    if f == "B" and n % 2:
        out.append(("~A1", n - 2))
    return out


def marks(t: SimpleType) -> list[Fraction]:
    """Values of the simple roots on the cascade element."""
    if not t.is_classical:
        return [Fraction(x) for x in _e(t)["marks"]]
    f, n = t.family, t.rank
    out = [Fraction(0)] * n
    if f == "A":
        p = n // 2
        if n % 2:
            out[p] = Fraction(1)
        else:
            out[p - 1] = out[p] = Fraction(1, 2)
        return out
    if f == "C":
        out[-1] = Fraction(1)
        return out
    alt = [Fraction((-1) ** i) for i in range(n)]
    if f == "B":
        return alt if n % 2 else alt[:-1] + [Fraction(0)]
    if n % 2 == 0:
        return alt[:-2] + [Fraction(1), Fraction(1)]
    return alt[:-2] + [Fraction(0), Fraction(0)]


def _w_k_signed_permutation(t: SimpleType) -> dict[int, tuple[int, int]] | None:
    f, r = t.family, t.rank
    if f == "A":
        if r % 2 == 0:
            return None
        n = (r + 1) // 2
        out = {i: (i + n, 1) for i in range(1, n + 1)}
        out.update({i + n: (i, 1) for i in range(1, n + 1)})
        return out
    if f == "C":
        return {i: (r + 1 - i, -1) for i in range(1, r + 1)}
    # orthogonal: work in D_N with N = 2n or 2n + 1, then drop the last column for B
    big = r + 1 if f == "B" else r
    n = big // 2
    out = {}
    for i in range(1, n + 1):
        out[2 * i - 1] = (n + 1 - i, -1)
    for i in range(1, n):
        out[2 * i] = (n + i, 1)
    if big % 2 == 0:
        out[2 * n] = (2 * n, (-1) ** n)
    else:
        out[2 * n] = (2 * n, 1)
        out[2 * n + 1] = (2 * n + 1, (-1) ** n)
    return {k: v for k, v in out.items() if k <= r}


def w_k_signed_permutation(t: SimpleType) -> dict[int, tuple[int, int]] | None:
    if not t.is_classical:
        return None
    return _w_k_signed_permutation(t)


def w_k_images(t: SimpleType) -> list[tuple[int, ...]] | None:
    """Images of the simple roots under w_K, or None where no table exists."""
    if t.is_classical:
        perm = _w_k_signed_permutation(t)
        if perm is None:
            return None
        m = cl.signed_permutation_matrix(t.family, t.rank, perm)
        return [tuple(m[i][j] for i in range(t.rank)) for j in range(t.rank)]
    data = _e(t)
    if "w_k_images" in data:
        return [tuple(v) for v in data["w_k_images"]]
    return None


def w_k_word(t: SimpleType) -> list[int] | None:
    if t.is_classical:
        return None
    return _e(t).get("w_k_word")


def signed_permutation_order(perm: dict[int, tuple[int, int]]) -> int:
    """Order of k -> sign * target, from its cycles: a cycle of length L and sign product -1 has order 2L."""
    seen: set[int] = set()
    order = 1
    for start in perm:
        if start in seen:
            continue
        k, length, sign = start, 0, 1
        while k not in seen:
            seen.add(k)
            k, s = perm[k]
            sign *= s
            length += 1
        order = lcm(order, length if sign == 1 else 2 * length)
    return order


def w_k_order(t: SimpleType) -> int | None:
    if t.family in "AC":
        return None if t.is_a_even else 2
    if t.family in "BD":
        return signed_permutation_order(_w_k_signed_permutation(t))
    return _e(t)["w_k_order"]


def n_positive(t: SimpleType) -> int:
    n = t.rank
    closed = {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}
    return closed.get(t.family) or {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}[str(t)]


def cascade_size(t: SimpleType) -> int:
    n = t.rank
    closed = {"A": (n + 1) // 2, "B": n, "C": n, "D": 2 * (n // 2)}
    return closed.get(t.family) or {"E6": 4, "E7": 7, "E8": 8, "F4": 4, "G2": 2}[str(t)]


def theta_node(t: SimpleType) -> int | None:
    """1-based j with w_K(theta) = -alpha_j."""
    f, r = t.family, t.rank
    if t.is_a_even:
        return None
    if f == "A":
        return (r + 1) // 2
    if f == "C":
        return r
    if f in "BD":
        return (r + 1) // 2 if f == "B" else r // 2
    return {"E6": 6, "E7": 7, "E8": 7, "F4": 4, "G2": 2}[str(t)]


def in_coroot_lattice(t: SimpleType) -> bool:
    """Whether the cascade element lies in the coroot lattice."""
    f, r = t.family, t.rank
    if f == "B":
        return r % 4 in (0, 3)
    if f == "D":
        return r % 4 in (0, 1)
    return f in "EFG" and str(t) != "E7"


def orbit_table(t: SimpleType) -> dict:
    """Partition (classical) or label (exceptional), orbit dimension, dim g(2), dim g(4), WDD."""
    f, r = t.family, t.rank
    if not t.is_classical:
        row = dict(_e(t)["orbit"])
    elif f == "A":
        j = (r + 1) // 2
        if r % 2:
            row = {"partition": [2] * j, "dim": 2 * j * j, "g2": j * j, "g4": 0}
        else:
            j = r // 2
            row = {"partition": [2] * j + [1], "dim": 2 * j * j + 2 * j, "g2": j * j, "g4": 0}
    elif f == "C":
        j = r
        row = {"partition": [2] * j, "dim": j * j + j, "g2": comb(j + 1, 2), "g4": 0}
    else:
        if f == "B" and r % 2:
            j = (r + 1) // 2
            row = {"partition": [3] * j + [1] * (j - 1), "dim": 5 * j * j - 3 * j, "g2": 2 * j * j - j}
        elif f == "D" and r % 2 == 0:
            j = r // 2
            row = {"partition": [3] * j + [1] * j, "dim": 5 * j * j - j, "g2": 2 * j * j}
        elif f == "B":
            j = r // 2
            row = {"partition": [3] * j + [1] * (j + 1), "dim": 5 * j * j + j, "g2": 2 * j * j + j}
        else:
            j = (r - 1) // 2
            row = {"partition": [3] * j + [1] * (j + 2), "dim": 5 * j * j + 3 * j, "g2": 2 * j * j + 2 * j}
        row["g4"] = comb(j, 2)
    wdd = [0] * r
    node = theta_node(t)
    if node is None:
        wdd[r // 2 - 1] = wdd[r // 2] = 1
    else:
        wdd[node - 1] = 2
    row["wdd"] = wdd
    return row
