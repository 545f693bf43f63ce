"""Coordinate models for the classical families.

Roots are written in the standard orthonormal basis eps_1, eps_2, ... and
converted to and from simple-root coordinates with the labelling used
throughout the package (A: chain, B: last root short, C: last root long,
D: the last two roots both attached to the third-to-last).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotClassical

CLASSICAL = "ABCD"


def _check(family: str) -> None:
    if family not in CLASSICAL:
        raise NotClassical(f"type {family} is not classical")


def ambient_dim(family: str, n: int) -> int:
    _check(family)
    return n + 1 if family == "A" else n


def eps(k: int, dim: int, sign: int = 1) -> tuple[int, ...]:
    """sign * eps_k (1-based) as a vector of length dim."""
    return tuple(sign if i == k - 1 else 0 for i in range(dim))


def vadd(*vs: Sequence) -> tuple:
    return tuple(sum(xs) for xs in zip(*vs))


def simple_roots(family: str, n: int) -> list[tuple[int, ...]]:
    _check(family)
    d = ambient_dim(family, n)
    out = [vadd(eps(i, d), eps(i + 1, d, -1)) for i in range(1, n)]
    if family == "A":
        out.append(vadd(eps(n, d), eps(n + 1, d, -1)))
    elif family == "B":
        out.append(eps(n, d))
    elif family == "C":
        out.append(eps(n, d, 2))
    else:
        out.append(vadd(eps(n - 1, d), eps(n, d)))
    return out


def eps_to_alpha(family: str, n: int, v: Sequence) -> tuple:
    """Simple-root coordinates of an eps vector (which must lie in the root span)."""
    _check(family)
    v = [Fraction(x) for x in v]
    partial = []
    s = Fraction(0)
    for x in v:
        s += x
        partial.append(s)
    if family == "A":
        if partial[-1] != 0:
            raise ValueError("vector is not in the root span of A")
        c = partial[:n]
    elif family == "B":
        c = partial[:n]
    elif family == "C":
        c = partial[: n - 1] + [partial[n - 1] / 2]
    else:
        c = partial[: n - 2] + [(partial[n - 2] - v[n - 1]) / 2, (partial[n - 2] + v[n - 1]) / 2]
    return tuple(int(x) if x.denominator == 1 else x for x in c)


def alpha_to_eps(family: str, n: int, c: Sequence) -> tuple:
    roots = simple_roots(family, n)
    d = ambient_dim(family, n)
    out = [Fraction(0)] * d
    for ci, r in zip(c, roots):
        for k in range(d):
            out[k] += ci * r[k]
    return tuple(int(x) if x.denominator == 1 else x for x in out)


def eps_form(family: str, u: Sequence, v: Sequence) -> Fraction:
    """Invariant form with long roots of squared length 2."""
    dot = sum(Fraction(a) * b for a, b in zip(u, v))
    return dot / 2 if family == "C" else dot


def positive_roots(family: str, n: int) -> list[tuple[int, ...]]:
    """Positive roots written directly in eps coordinates."""
    _check(family)
    d = ambient_dim(family, n)
    out = []
    if family == "A":
        for i in range(1, d + 1):
            for j in range(i + 1, d + 1):
                out.append(vadd(eps(i, d), eps(j, d, -1)))
        return out
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(vadd(eps(i, d), eps(j, d, -1)))
            out.append(vadd(eps(i, d), eps(j, d)))
        if family == "B":
            out.append(eps(i, d))
        elif family == "C":
            out.append(eps(i, d, 2))
    return out


def signed_permutation_matrix(family: str, n: int, images: dict[int, tuple[int, int]]):
    """Root-coordinate matrix of the map eps_k -> sign * eps_{images[k]}.

    images maps k to (target index, sign); columns are images of simple roots.
    """
    d = ambient_dim(family, n)

    def act(v):
        out = [0] * d
        for k, x in enumerate(v, start=1):
            if x:
                t, s = images[k]
                out[t - 1] += s * x
        return out

    cols = [eps_to_alpha(family, n, act(r)) for r in simple_roots(family, n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# defining representations -------------------------------------------------------
#
# sl_{n+1} acts on C^{n+1}; so_N and sp_{2n} preserve the antidiagonal form
# (skew for sp).  Basis vectors are numbered 1..N and k' = N + 1 - k.


def defining_dim(family: str, n: int) -> int:
    _check(family)
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[family]


def _unit(N: int, a: int, b: int, s: int = 1) -> list[list[int]]:
    m = [[0] * N for _ in range(N)]
    m[a - 1][b - 1] = s
    return m


def _madd(*ms):
    return [[sum(vals) for vals in zip(*rows)] for rows in zip(*ms)]


def root_vector(family: str, n: int, root_eps: Sequence) -> list[list[int]]:
    """A nonzero matrix in the root space of the given root (eps coordinates)."""
    N = defining_dim(family, n)
    nz = [(k + 1, int(x)) for k, x in enumerate(root_eps) if x]

    def p(k):
        return N + 1 - k

    if family == "A":
        (i, _), (j, _) = sorted(nz, key=lambda t: -t[1])
        return _unit(N, i, j)
    if len(nz) == 1:
        (i, c), = nz
        if family == "B":
            if c == 1:
                return _madd(_unit(N, i, n + 1), _unit(N, n + 1, p(i), -1))
            return _madd(_unit(N, n + 1, i), _unit(N, p(i), n + 1, -1))
        if family == "C":
            return _unit(N, i, p(i)) if c > 0 else _unit(N, p(i), i)
        raise ValueError(f"{root_eps} is not a root of {family}{n}")
    (i, a), (j, b) = nz
    sign = 1 if family == "C" else -1
    if a == 1 and b == -1:
        return _madd(_unit(N, i, j), _unit(N, p(j), p(i), -1))
    if a == -1 and b == 1:
        return _madd(_unit(N, j, i), _unit(N, p(i), p(j), -1))
    if a == 1 and b == 1:
        return _madd(_unit(N, i, p(j)), _unit(N, j, p(i), sign))
    return _madd(_unit(N, p(j), i), _unit(N, p(i), j, sign))


def invariant_form(family: str, n: int) -> list[list[int]]:
    N = defining_dim(family, n)
    J = [[0] * N for _ in range(N)]
    for a in range(1, N + 1):
        J[a - 1][N - a] = 1 if family != "C" or a <= n else -1
    return J


def diagonal_weights(family: str, n: int) -> list[tuple[int, ...]]:
    """eps-coordinates of the weights of the defining representation, in basis order."""
    d = ambient_dim(family, n)
    if family == "A":
        return [eps(k, d) for k in range(1, d + 1)]
    out = [eps(k, d) for k in range(1, n + 1)]
    if family == "B":
        out.append(tuple([0] * d))
    out += [eps(k, d, -1) for k in range(n, 0, -1)]
    return out
