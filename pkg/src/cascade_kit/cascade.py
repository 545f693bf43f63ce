"""The cascade of strongly orthogonal roots and its poset structure."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DecompositionMismatch, InvariantViolation, require
from .root_system import Root, RootSystem, WeylElement, build
from .simple_type import SimpleType


@dataclass(frozen=True)
class CascadeNode:
    index: int  # 0-based; displayed as beta_{index+1}
    beta: Root
    parent: int | None
    children: tuple[int, ...]
    support: frozenset[int]
    subtype: SimpleType
    short: bool
    phi: frozenset[int]  # simple roots (0-based) in the Heisenberg subset
    level: int  # the root node sits at level 1
    heisenberg: frozenset = frozenset()

    @property
    def label(self) -> str:
        if self.subtype.rank == 1 or str(self.subtype) == "A1":
            return "~A1" if self.short else "A1"
        return str(self.subtype)


@dataclass(frozen=True)
class Cascade:
    rs: RootSystem
    nodes: tuple[CascadeNode, ...]

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, i) -> CascadeNode:
        return self.nodes[i]

    @property
    def betas(self) -> list[Root]:
        return [n.beta for n in self.nodes]

    def ancestors(self, i: int) -> list[int]:
        out = []
        p = self.nodes[i].parent
        while p is not None:
            out.append(p)
            p = self.nodes[p].parent
        return out

    def is_descendant(self, i: int, j: int) -> bool:
        """beta_i lies strictly below beta_j in the tree."""
        return j in self.ancestors(i)

    def subsystem(self, i: int) -> list[Root]:
        return self.rs.subsystem_roots(self.nodes[i].support)

    def heisenberg(self, i: int) -> frozenset[Root]:
        return heisenberg_subset(self, i)

    def to_json(self) -> list[dict]:
        return [
            {
                "index": n.index + 1,
                "root": list(n.beta),
                "parent": None if n.parent is None else n.parent + 1,
                "subtype": n.label,
                "phi": [i + 1 for i in sorted(n.phi)],
            }
            for n in self.nodes
        ]


# classification of connected Dynkin subdiagrams -------------------------


def _path_from(rs: RootSystem, nodes: frozenset[int], start: int) -> list[int]:
    path, prev = [start], None
    while True:
        nxt = [j for j in nodes if j != prev and j not in path and rs.adjacent(path[-1], j)]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def _arm(rs: RootSystem, nodes: frozenset[int], branch: int, first: int) -> list[int]:
    arm, prev = [first], branch
    while True:
        nxt = [j for j in nodes if j != prev and rs.adjacent(arm[-1], j)]
        if not nxt:
            return arm
        prev = arm[-1]
        arm.append(nxt[0])


def classify(rs: RootSystem, nodes) -> tuple[SimpleType, list[int]]:
    """Cartan type of a connected subdiagram and an ordering of its nodes in standard numbering.

    The ordering is checked by comparing Cartan matrices with the standard model.
    """
    nodes = frozenset(nodes)
    n = len(nodes)
    degree = {i: sum(rs.adjacent(i, j) for j in nodes) for i in nodes}
    bonds = {(i, j): rs.bond(i, j) for i in nodes for j in nodes if i < j and rs.adjacent(i, j)}
    if n == 1:
        t, order = SimpleType("A", 1), sorted(nodes)
    elif any(b == 3 for b in bonds.values()):
        i, j = next(e for e, b in bonds.items() if b == 3)
        short, long_ = (i, j) if rs.lengths[i] < rs.lengths[j] else (j, i)
        t, order = SimpleType("G", 2), [short, long_]
    elif any(b == 2 for b in bonds.values()):
        i, j = next(e for e, b in bonds.items() if b == 2)
        ends = sorted(k for k in nodes if degree[k] <= 1)
        if n == 2:
            t = SimpleType("B" if rs.lengths[j] < rs.lengths[i] else "C", 2)
            order = [i, j]
        elif degree[i] == 1 or degree[j] == 1:
            tail = j if degree[j] == 1 else i
            other = next(k for k in ends if k != tail)
            order = _path_from(rs, nodes, other)
            t = SimpleType("B" if rs.lengths[tail] < rs.lengths[order[-2]] else "C", n)
        else:
            short_end = next(k for k in ends if rs.lengths[k] < 2)
            t, order = SimpleType("F", 4), _path_from(rs, nodes, short_end)
    else:
        branch = [k for k in nodes if degree[k] == 3]
        if not branch:
            start = min(k for k in nodes if degree[k] <= 1)
            t, order = SimpleType("A", n), _path_from(rs, nodes, start)
        else:
            b = branch[0]
            arms = sorted(
                (_arm(rs, nodes, b, k) for k in nodes if rs.adjacent(b, k)),
                key=lambda a: (len(a), min(a)),
            )
            lens = tuple(len(a) for a in arms)
            if lens[0] == lens[1] == 1:
                long_arm = arms[2]
                t = SimpleType("D", n)
                order = long_arm[::-1] + [b] + sorted(arms[0] + arms[1])
            else:
                t = SimpleType("E", n)
                order = arms[2][::-1] + [b] + arms[1] + arms[0]
    model = build(t)
    got = [[rs.cartan[i][j] for j in order] for i in order]
    if got != [list(r) for r in model.cartan]:
        raise DecompositionMismatch(f"subdiagram {sorted(nodes)} does not match {t}")
    return t, order


# cascade construction ------------------------------------------------------


def _highest(rs: RootSystem, support: frozenset[int]) -> Root:
    roots = rs.subsystem_roots(support)
    top = roots[-1]
    require(all(rs.root_order_leq(g, top) for g in roots), "subsystem has no unique highest root")
    return top


@lru_cache(maxsize=None)
def compute_cascade(rs: RootSystem) -> Cascade:
    """Build the cascade breadth-first, children ordered by their smallest simple root."""
    raw: list[dict] = []
    queue = deque([(frozenset(range(rs.rank)), None, 1)])
    while queue:
        support, parent, level = queue.popleft()
        beta = _highest(rs, support)
        t, _ = classify(rs, support)
        idx = len(raw)
        raw.append(dict(index=idx, beta=beta, parent=parent, support=support, subtype=t, level=level))
        orth = [i for i in support if rs.pairing(rs.simple_root(i), beta) == 0]
        for comp in rs.components(orth):
            queue.append((comp, idx, level + 1))
    long2 = max(rs.lengths)
    nodes = []
    for d in raw:
        children = tuple(e["index"] for e in raw if e["parent"] == d["index"])
        phi = frozenset(i for i in d["support"] if rs.pairing(rs.simple_root(i), d["beta"]) > 0)
        short = rs.length2(d["beta"]) < long2
        hs = _heisenberg(rs, d["support"], d["beta"])
        nodes.append(CascadeNode(children=children, phi=phi, short=short, heisenberg=hs, **d))
    c = Cascade(rs, tuple(nodes))
    _check_partition(c)
    return c


def cascade_of(t: SimpleType | str) -> Cascade:
    return compute_cascade(build(t))


def heisenberg_subset(c: Cascade, i: int) -> frozenset[Root]:
    """Roots of the node's subsystem pairing positively with its highest root."""
    return c.nodes[i].heisenberg


def _heisenberg(rs: RootSystem, support: frozenset[int], beta: Root) -> frozenset[Root]:
    vals, _ = rs.scaled_values(beta)
    sel = rs.subsystem_mask(support) & (vals > 0)
    return frozenset(rs.positive_roots[k] for k in np.nonzero(sel)[0])


def heisenberg_index(c: Cascade) -> dict[Root, int]:
    """Map each positive root to the cascade node whose Heisenberg subset contains it."""
    out: dict[Root, int] = {}
    for node in c.nodes:
        for g in heisenberg_subset(c, node.index):
            out[g] = node.index
    return out


def _check_partition(c: Cascade) -> None:
    total = sum(len(heisenberg_subset(c, i)) for i in range(len(c)))
    require(total == c.rs.n_positive, "Heisenberg subsets do not cover the positive roots")
    require(len(heisenberg_index(c)) == c.rs.n_positive, "Heisenberg subsets overlap")


def phi_map(c: Cascade) -> dict[int, frozenset[int]]:
    return {n.index: n.phi for n in c.nodes}


def longest_element(c: Cascade, rng: random.Random | None = None) -> WeylElement:
    """Product of the cascade reflections, in a random order if rng is given."""
    order = list(range(len(c)))
    if rng is not None:
        rng.shuffle(order)
    w = c.rs.identity()
    for i in order:
        w = w @ c.rs.reflection(c.nodes[i].beta)
    if not c.rs.sends_positive_to_negative(w):
        raise InvariantViolation("product of cascade reflections is not the longest element")
    return w


# Hasse diagram ---------------------------------------------------------------


def _display_label(label: str) -> str:
    return "Ã" + label[2:] if label.startswith("~") else label


def hasse_diagram(c: Cascade, fmt: str = "text") -> str:
    if fmt == "dot":
        lines = ["digraph cascade {", "  node [shape=circle];"]
        for n in c.nodes:
            lines.append(f'  b{n.index + 1} [label="β{n.index + 1} {{{_display_label(n.label)}}}"];')
        for n in c.nodes:
            for ch in n.children:
                lines.append(f"  b{n.index + 1} -> b{ch + 1};")
        lines.append("}")
        return "\n".join(lines)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines: list[str] = []

    def walk(i: int, depth: int) -> None:
        n = c.nodes[i]
        lines.append("  " * depth + f"β{i + 1} {{{_display_label(n.label)}}}")
        for ch in n.children:
            walk(ch, depth + 1)

    walk(0, 0)
    return "\n".join(lines)


LABEL_EQUIVALENCES = {"C1": "A1", "B1": "A1", "D3": "A3", "C2": "C2", "B2": "B2"}


def canonical_tree(labels: list[str], parents: list[int | None]) -> str:
    """Canonical string of a rooted labelled tree; equal strings mean level-preserving isomorphism."""
    kids: dict[int, list[int]] = {i: [] for i in range(len(labels))}
    root = None
    for i, p in enumerate(parents):
        if p is None:
            root = i
        else:
            kids[p].append(i)

    def canon(i: int) -> str:
        lab = LABEL_EQUIVALENCES.get(labels[i], labels[i])
        return lab + "(" + ",".join(sorted(canon(k) for k in kids[i])) + ")"

    return canon(root)


def tree_signature(c: Cascade) -> str:
    return canonical_tree([n.label for n in c.nodes], [n.parent for n in c.nodes])
