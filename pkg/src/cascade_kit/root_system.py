"""Root systems of simple Lie algebras in simple-root coordinates.

Everything is exact.  The invariant form is normalised so that long roots
have squared length 2; internally it is stored as an integer matrix divided
by a common scale so that numpy integer arithmetic can be used for bulk work.
Weyl group elements are integer matrices acting on simple-root coordinates
(columns are the images of simple roots).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, Sequence, Union

import numpy as np

from . import fixtures
from .errors import InvariantViolation, OrderOverflow, PreconditionFailed
from .linalg import inverse
from .simple_type import SimpleType

Root = tuple  # tuple[int, ...] in simple-root coordinates

ORDER_BOUND = 10**6


class WeightVector(tuple):
    """A vector of t* (identified with t through the form) in simple-root coordinates."""

    def __new__(cls, coords: Iterable):
        return super().__new__(cls, (Fraction(c) for c in coords))

    def __add__(self, other):
        return WeightVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return WeightVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return WeightVector(-a for a in self)

    def __mul__(self, k):
        return WeightVector(a * k for a in self)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return WeightVector(a / k for a in self)

    def __repr__(self):
        return "WeightVector(" + ", ".join(str(a) for a in self) + ")"

    @classmethod
    def zero(cls, n: int) -> "WeightVector":
        return cls([0] * n)

    @property
    def denominator(self) -> int:
        return lcm(*(a.denominator for a in self)) if self else 1

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self)


Vector = Union[WeightVector, Sequence]


def _integral(v) -> tuple[int, list[int]]:
    """Common denominator and scaled integer coordinates."""
    if isinstance(v, WeightVector):
        d = v.denominator
        return d, [int(x * d) for x in v]
    return 1, v


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Integer matrix acting on simple-root coordinates."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.int64)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def key(self) -> bytes:
        return self.matrix.tobytes()

    def __eq__(self, other):
        return isinstance(other, WeylElement) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.key)

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.matrix @ other.matrix)

    def __call__(self, x):
        return self.apply(x)

    def apply(self, x):
        if isinstance(x, WeightVector):
            m = self.matrix.tolist()
            return WeightVector(sum(m[i][k] * x[k] for k in range(len(x))) for i in range(len(x)))
        return tuple(int(v) for v in self.matrix @ np.asarray(x, dtype=np.int64))

    def is_identity(self) -> bool:
        return np.array_equal(self.matrix, np.eye(len(self.matrix), dtype=np.int64))

    def order(self, bound: int = ORDER_BOUND) -> int:
        p = self.matrix
        for k in range(1, bound + 1):
            if np.array_equal(p, np.eye(len(p), dtype=np.int64)):
                return k
            p = p @ self.matrix
        raise OrderOverflow(f"order exceeds {bound}")

    def images(self) -> list[Root]:
        """Images of the simple roots."""
        return [tuple(int(v) for v in col) for col in self.matrix.T]

    def inverse(self) -> "WeylElement":
        inv = inverse(self.matrix.tolist())
        if any(x.denominator != 1 for row in inv for x in row):
            raise InvariantViolation("Weyl element has non-integral inverse")
        return WeylElement([[int(x) for x in row] for row in inv])


# Dynkin diagrams in the standard numbering.  Squared lengths are relative to
# long roots of length 2; adjacent simple roots pair to minus half the larger
# squared length.
def _diagram(t: SimpleType) -> tuple[list[tuple[int, int]], list[Fraction]]:
    f, n = t.family, t.rank
    edges = [(i, i + 1) for i in range(n - 1)]
    lengths = [Fraction(2)] * n
    if f == "B":
        lengths[-1] = Fraction(1)
    elif f == "C":
        lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
    elif f == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif f == "E":
        branch = {6: 2, 7: 3, 8: 4}[n]
        edges = [(i, i + 1) for i in range(n - 2)] + [(branch, n - 1)]
    elif f == "F":
        lengths = [Fraction(1), Fraction(1), Fraction(2), Fraction(2)]
    elif f == "G":
        lengths = [Fraction(2, 3), Fraction(2)]
    return edges, lengths


def _generate_positive_roots(cartan: list[list[int]]) -> list[Root]:
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    layer = simple
    while layer:
        nxt = []
        for g in layer:
            for i in range(r):
                p, v = 0, list(g)
                while True:
                    v[i] -= 1
                    if tuple(v) in found:
                        p += 1
                    else:
                        break
                q = p - sum(g[k] * cartan[k][i] for k in range(r))
                if q > 0:
                    new = g[:i] + (g[i] + 1,) + g[i + 1 :]
                    if new not in found:
                        found.add(new)
                        nxt.append(new)
        layer = nxt
    return sorted(found, key=lambda c: (sum(c), tuple(-x for x in c)))


class RootSystem:
    """Root system of a simple type with its form, roots and Weyl group helpers."""

    def __init__(self, simple_type: SimpleType):
        self.simple_type = simple_type
        self.rank = n = simple_type.rank
        edges, lengths = _diagram(simple_type)
        self.edges = tuple(edges)
        self.lengths = tuple(lengths)
        form = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            form[i][i] = lengths[i]
        for i, j in edges:
            form[i][j] = form[j][i] = -max(lengths[i], lengths[j]) / 2
        self.form = tuple(tuple(row) for row in form)
        self.cartan = tuple(tuple(int(2 * form[i][j] / form[j][j]) for j in range(n)) for i in range(n))
        self.scale = lcm(*(x.denominator for row in form for x in row))
        self._form_rows = [[int(x * self.scale) for x in row] for row in form]
        self._form_int = np.array(self._form_rows, dtype=np.int64)
        self.positive_roots: list[Root] = _generate_positive_roots([list(r) for r in self.cartan])
        self._index = {g: k for k, g in enumerate(self.positive_roots)}
        self.theta: Root = self.positive_roots[-1]
        self.pos = np.array(self.positive_roots, dtype=np.int64)
        self.heights = self.pos.sum(axis=1)
        self._validate()

    def _validate(self):
        if sum(1 for g in self.positive_roots if sum(g) == self.heights.max()) != 1:
            raise InvariantViolation("highest root is not unique")
        expected = fixtures.theta(self.simple_type)
        if self.theta != expected:
            raise InvariantViolation(f"highest root {self.theta} differs from reference {expected}")

    def __repr__(self):
        return f"RootSystem({self.simple_type})"

    # basic data -----------------------------------------------------------

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def dim(self) -> int:
        return self.rank + 2 * self.n_positive

    def simple_root(self, i: int) -> Root:
        return tuple(int(i == j) for j in range(self.rank))

    @property
    def simple_roots(self) -> list[Root]:
        return [self.simple_root(i) for i in range(self.rank)]

    def index(self, g: Root) -> int:
        return self._index[tuple(g)]

    def is_positive_root(self, v) -> bool:
        return tuple(v) in self._index

    def is_root(self, v) -> bool:
        v = tuple(v)
        return v in self._index or tuple(-x for x in v) in self._index

    @property
    def all_roots(self) -> list[Root]:
        return self.positive_roots + [tuple(-x for x in g) for g in self.positive_roots]

    @staticmethod
    def height(g) -> int:
        return sum(g)

    @staticmethod
    def support(g) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(g) if c)

    def adjacent(self, i: int, j: int) -> bool:
        return self.form[i][j] != 0 and i != j

    def bond(self, i: int, j: int) -> int:
        return self.cartan[i][j] * self.cartan[j][i]

    def length2(self, g) -> Fraction:
        return self.pairing(g, g)

    def is_long(self, g) -> bool:
        return self.length2(g) == 2

    @cached_property
    def max_coefficient(self) -> int:
        return max(self.theta)

    # form ---------------------------------------------------------------------

    def pairing(self, a: Vector, b: Vector) -> Fraction:
        da, ai = _integral(a)
        db, bi = _integral(b)
        f = self._form_rows
        total = 0
        for i, x in enumerate(ai):
            if x:
                row = f[i]
                total += x * sum(row[j] * y for j, y in enumerate(bi) if y)
        return Fraction(total, self.scale * da * db)

    def coroot(self, g) -> WeightVector:
        return WeightVector(g) * (2 / self.length2(g))

    def values(self, x: Vector, roots: np.ndarray | None = None) -> list[Fraction]:
        """(gamma, x) for every row gamma of roots (default: all positive roots)."""
        x = WeightVector(x)
        den = x.denominator
        xn = np.array([int(c * den) for c in x], dtype=np.int64)
        rows = self.pos if roots is None else roots
        raw = rows @ (self._form_int @ xn)
        d = den * self.scale
        return [Fraction(int(v), d) for v in raw]

    def scaled_values(self, x: Vector, roots: np.ndarray | None = None) -> tuple[np.ndarray, int]:
        """Integer numerators and common denominator of values(x, roots)."""
        x = WeightVector(x)
        den = x.denominator
        xn = np.array([int(c * den) for c in x], dtype=np.int64)
        rows = self.pos if roots is None else roots
        return rows @ (self._form_int @ xn), den * self.scale

    def marks(self, x: Vector) -> list[Fraction]:
        """Values of the simple roots on x."""
        return [self.pairing(self.simple_root(i), x) for i in range(self.rank)]

    @cached_property
    def inverse_form(self) -> list[list[Fraction]]:
        return inverse([list(r) for r in self.form])

    def fundamental_coweight(self, j: int) -> WeightVector:
        """The vector paired to 1 with alpha_j and to 0 with the other simple roots."""
        return WeightVector(self.inverse_form[i][j] for i in range(self.rank))

    def fundamental_weight(self, j: int) -> WeightVector:
        return self.fundamental_coweight(j) * (self.length2(self.simple_root(j)) / 2)

    @cached_property
    def _inverse_form_int(self) -> tuple[np.ndarray, int]:
        den = lcm(*(x.denominator for row in self.inverse_form for x in row))
        return np.array([[int(x * den) for x in row] for row in self.inverse_form], dtype=np.int64), den

    def coweight_from_marks(self, marks: Sequence) -> WeightVector:
        """The vector whose values on the simple roots are the given marks."""
        d, mi = _integral(WeightVector(marks))
        inv, den = self._inverse_form_int
        num = inv @ np.array(mi, dtype=np.int64)
        return WeightVector(Fraction(int(v), den * d) for v in num)

    def marks_scaled(self, x: Vector) -> tuple[list[int], int]:
        """Integer numerators and denominator of the marks of x."""
        d, xi = _integral(WeightVector(x))
        num = self._form_int @ np.array(xi, dtype=np.int64)
        return [int(v) for v in num], d * self.scale

    @cached_property
    def rho(self) -> WeightVector:
        return WeightVector(self.pos.sum(axis=0).tolist()) / 2

    @cached_property
    def rho_vee(self) -> WeightVector:
        total = WeightVector.zero(self.rank)
        for g in self.positive_roots:
            total = total + self.coroot(g)
        return total / 2

    def coxeter_numbers(self) -> tuple[int, int]:
        """(h, h*): one plus the heights of theta and of its coroot."""
        h = 1 + sum(self.theta)
        h_dual = 1 + self.pairing(self.rho, self.coroot(self.theta))
        if h_dual.denominator != 1:
            raise InvariantViolation("dual Coxeter number is not an integer")
        return h, int(h_dual)

    def is_theta_fundamental(self) -> bool:
        m = [self.pairing(self.theta, self.coroot(self.simple_root(i))) for i in range(self.rank)]
        return sorted(m) == [0] * (self.rank - 1) + [1]

    # lattices -------------------------------------------------------------

    def lattice_member(self, v: Vector, lattice: str) -> bool:
        """Membership of v in Q, Q^vee, P or P^vee."""
        v = WeightVector(v)
        if lattice == "Q":
            return v.is_integral()
        if lattice in ("Qvee", "Q^vee"):
            return all((c * self.lengths[i] / 2).denominator == 1 for i, c in enumerate(v))
        if lattice == "P":
            return all(self.pairing(v, self.coroot(a)).denominator == 1 for a in self.simple_roots)
        if lattice in ("Pvee", "P^vee"):
            return all(m.denominator == 1 for m in self.marks(v))
        raise ValueError(f"unknown lattice {lattice!r}")

    # ordering ---------------------------------------------------------------

    @staticmethod
    def root_order_leq(a, b) -> bool:
        """a <= b in the root order: b - a is a non-negative combination of simple roots."""
        return all(y >= x for x, y in zip(a, b))

    def is_upper_ideal(self, roots: Iterable) -> bool:
        s = {tuple(g) for g in roots}
        if not all(g in self._index for g in s):
            return False
        mask = np.zeros(self.n_positive, dtype=bool)
        mask[[self._index[g] for g in s]] = True
        lo, hi = self.covers[:, 0], self.covers[:, 1]
        return not np.any(mask[lo] & ~mask[hi])

    def is_abelian(self, roots: Iterable) -> bool:
        """No two roots of the set add up to a root."""
        mask = self.mask(roots)
        a, b = self.sum_triples[:, 0], self.sum_triples[:, 1]
        return not np.any(mask[a] & mask[b])

    def is_closed(self, roots: Iterable) -> bool:
        """Closed under addition within the positive roots."""
        mask = self.mask(roots)
        a, b, c = self.sum_triples.T
        return not np.any(mask[a] & mask[b] & ~mask[c])

    def mask(self, roots: Iterable) -> np.ndarray:
        m = np.zeros(self.n_positive, dtype=bool)
        idx = [self._index[tuple(g)] for g in roots]
        if idx:
            m[idx] = True
        return m

    # precomputed tables -------------------------------------------------------

    @cached_property
    def _radix(self) -> tuple[int, int]:
        off = 2 * self.max_coefficient
        return off, 2 * off + 1

    def keys(self, rows: np.ndarray) -> np.ndarray:
        off, base = self._radix
        weights = base ** np.arange(self.rank, dtype=np.int64)
        return (np.asarray(rows, dtype=np.int64) + off) @ weights

    @cached_property
    def _sorted_keys(self) -> tuple[np.ndarray, np.ndarray]:
        k = self.keys(self.pos)
        order = np.argsort(k)
        return k[order], order

    def ids(self, rows: np.ndarray) -> np.ndarray:
        """Index of each row among the positive roots, or -1."""
        keys, order = self._sorted_keys
        k = self.keys(rows)
        pos = np.searchsorted(keys, k).clip(0, len(keys) - 1)
        return np.where(keys[pos] == k, order[pos], -1)

    @cached_property
    def sum_triples(self) -> np.ndarray:
        """Rows (i, j, k) with gamma_i + gamma_j = gamma_k, i < j."""
        n = self.n_positive
        i, j = np.triu_indices(n, k=1)
        k = self.ids(self.pos[i] + self.pos[j])
        ok = k >= 0
        return np.stack([i[ok], j[ok], k[ok]], axis=1)

    @cached_property
    def covers(self) -> np.ndarray:
        """Rows (i, k, s) with gamma_k = gamma_i + alpha_s."""
        out = []
        for s in range(self.rank):
            k = self.ids(self.pos + np.eye(self.rank, dtype=np.int64)[s])
            for i in np.nonzero(k >= 0)[0]:
                out.append((i, k[i], s))
        return np.array(out, dtype=np.int64).reshape(-1, 3)

    # Weyl group -------------------------------------------------------------

    def identity(self) -> WeylElement:
        return WeylElement(np.eye(self.rank, dtype=np.int64))

    def simple_reflection(self, i: int) -> WeylElement:
        m = np.eye(self.rank, dtype=np.int64)
        m[i, :] -= np.array([self.cartan[k][i] for k in range(self.rank)], dtype=np.int64)
        return WeylElement(m)

    def reflection(self, g) -> WeylElement:
        gv = np.asarray(g, dtype=np.int64)
        fg = self._form_int @ gv
        num, den = 2 * fg, int(gv @ fg)
        if np.any(num % den):
            raise InvariantViolation("reflection matrix is not integral")
        return WeylElement(np.eye(self.rank, dtype=np.int64) - np.outer(gv, num // den))

    def word(self, letters: Sequence[int]) -> WeylElement:
        """Product s_{l0} s_{l1} ... (rightmost acts first)."""
        w = self.identity()
        for i in letters:
            w = w @ self.simple_reflection(i)
        return w

    def apply(self, w: WeylElement, x):
        return w.apply(x)

    @staticmethod
    def compose(a: WeylElement, b: WeylElement) -> WeylElement:
        return a @ b

    def order(self, w: WeylElement, bound: int = ORDER_BOUND) -> int:
        return w.order(bound)

    def image_rows(self, w: WeylElement, rows: np.ndarray | None = None) -> np.ndarray:
        rows = self.pos if rows is None else rows
        return rows @ w.matrix.T

    def inversion_set(self, w: WeylElement) -> frozenset[Root]:
        img = self.image_rows(w)
        neg = (img < 0).any(axis=1)
        return frozenset(self.positive_roots[k] for k in np.nonzero(neg)[0])

    def sends_positive_to_negative(self, w: WeylElement) -> bool:
        return bool((self.image_rows(w) < 0).any(axis=1).all())

    # subsystems ---------------------------------------------------------------

    def subsystem_mask(self, support: Iterable[int]) -> np.ndarray:
        outside = [i for i in range(self.rank) if i not in set(support)]
        if not outside:
            return np.ones(self.n_positive, dtype=bool)
        return ~(self.pos[:, outside] != 0).any(axis=1)

    def subsystem_roots(self, support: Iterable[int]) -> list[Root]:
        return [self.positive_roots[k] for k in np.nonzero(self.subsystem_mask(support))[0]]

    def components(self, nodes: Iterable[int]) -> list[frozenset[int]]:
        """Connected components of the Dynkin diagram restricted to nodes, by smallest index."""
        left = set(nodes)
        out = []
        while left:
            start = min(left)
            comp, stack = {start}, [start]
            while stack:
                i = stack.pop()
                for j in list(left):
                    if j not in comp and self.adjacent(i, j):
                        comp.add(j)
                        stack.append(j)
            left -= comp
            out.append(frozenset(comp))
        return sorted(out, key=min)

    def base_of(self, roots: Iterable[Root]) -> list[Root]:
        """Indecomposable elements of a closed set of positive roots."""
        rs = [tuple(g) for g in roots]
        mask = self.mask(rs)
        a, b, c = self.sum_triples.T
        hit = np.zeros(self.n_positive, dtype=bool)
        sel = mask[a] & mask[b]
        hit[c[sel]] = True
        return [g for g in rs if not hit[self._index[g]]]

    def to_json(self) -> dict:
        return {
            "type": str(self.simple_type),
            "rank": self.rank,
            "positive_roots": [list(g) for g in self.positive_roots],
            "theta": list(self.theta),
        }


@lru_cache(maxsize=None)
def build(simple_type: SimpleType | str) -> RootSystem:
    if isinstance(simple_type, str):
        simple_type = SimpleType.parse(simple_type)
    return RootSystem(simple_type)


def coxeter_numbers(rs: RootSystem) -> tuple[int, int]:
    return rs.coxeter_numbers()


def lattice_member(rs: RootSystem, v: Vector, lattice: str) -> bool:
    return rs.lattice_member(v, lattice)


def require_rank_drop(rs: RootSystem, roots: Sequence[Root], expected: int) -> None:
    from .linalg import rank

    got = rank([list(g) for g in roots]) if roots else 0
    if got != expected:
        raise PreconditionFailed(f"subsystem has rank {got}, expected {expected}")
