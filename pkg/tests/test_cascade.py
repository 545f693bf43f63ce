import random

import pytest
from conftest import ALL_NAMES
from hypothesis import given
from hypothesis import strategies as st

from cascade_kit import DecompositionMismatch, SimpleType, build, cascade_of, fixtures, hasse_diagram, longest_element
from cascade_kit.cascade import canonical_tree, classify, tree_signature


@pytest.mark.parametrize("name", ALL_NAMES)
def test_cascade_matches_reference(name):
    t = SimpleType.parse(name)
    c = cascade_of(t)
    assert set(c.betas) == set(fixtures.cascade(t))
    assert len(c) == fixtures.cascade_size(t)
    ref = fixtures.hasse(t)
    expected = canonical_tree([lab for lab, _ in ref], [None if p is None else p - 1 for _, p in ref])
    assert tree_signature(c) == expected


@pytest.mark.parametrize("name", ALL_NAMES)
def test_structure(name):
    c = cascade_of(name)
    rs = c.rs
    assert c[0].beta == rs.theta and c[0].parent is None
    # Heisenberg subsets partition the positive roots
    seen = set()
    for n in c:
        assert n.beta in n.heisenberg
        assert not (seen & n.heisenberg)
        seen |= n.heisenberg
        assert n.beta == rs.subsystem_roots(n.support)[-1]
        if n.parent is not None:
            assert n.support < c[n.parent].support
            assert n.level == c[n.parent].level + 1
    assert seen == set(rs.positive_roots)
    # children of a node have disjoint, mutually orthogonal supports
    for n in c:
        for a in n.children:
            for b in n.children:
                if a < b:
                    assert not (c[a].support & c[b].support)
                    assert all(not rs.adjacent(i, j) for i in c[a].support for j in c[b].support)
    # the simple roots are split among the phi sets
    assert sorted(i for n in c for i in n.phi) == list(range(rs.rank))


@pytest.mark.parametrize("name", ["E8", "F4", "B7", "D9"])
@given(seed=st.integers(0, 10**6))
def test_longest_element_any_order(name, seed):
    c = cascade_of(name)
    w0 = longest_element(c)
    assert longest_element(c, random.Random(seed)) == w0
    assert c.rs.sends_positive_to_negative(w0)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_subtypes_classify_consistently(name):
    c = cascade_of(name)
    for n in c:
        t, order = classify(c.rs, n.support)
        assert t == n.subtype and sorted(order) == sorted(n.support)
        assert build(t).coxeter_numbers()[0] == 1 + sum(n.beta)


def test_classify_double_bonds():
    # the two ends of the double bond decide between B2 and C2
    assert str(classify(build("B3"), {1, 2})[0]) == "B2"
    assert str(classify(build("C3"), {1, 2})[0]) == "C2"
    assert str(classify(build("F4"), {0, 1, 2})[0]) == "C3"
    assert str(classify(build("F4"), {1, 2, 3})[0]) == "B3"


def test_classify_rejects_inconsistent_order(monkeypatch):
    import cascade_kit.cascade as mod

    real = mod.build
    monkeypatch.setattr(mod, "build", lambda t: real("A3") if str(t) == "D4" else real(t))
    with pytest.raises(DecompositionMismatch):
        classify(real("D4"), {0, 1, 2, 3})


def test_hasse_rendering():
    g2 = cascade_of("G2")
    dot = hasse_diagram(g2, "dot")
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")
    assert "b1 -> b2;" in dot and "Ã1" in dot and dot.count("->") == 1
    text = hasse_diagram(cascade_of("D4"), "text").splitlines()
    assert text[0] == "β1 {D4}" and len(text) == 4 and all(line.startswith("  β") for line in text[1:])
    with pytest.raises(ValueError):
        hasse_diagram(g2, "svg")


def test_short_cascade_roots():
    for name in ALL_NAMES:
        c = cascade_of(name)
        short = [n for n in c if n.short]
        t = c.rs.simple_type
        if (t.family == "B" and t.rank % 2) or name == "G2":
            assert len(short) == 1 and short[0].label == "~A1" and short[0].beta in c.rs.simple_roots
        else:
            assert not short


def test_json_shape():
    j = cascade_of("E7").to_json()
    assert j[0] == {"index": 1, "root": [1, 2, 3, 4, 3, 2, 2], "parent": None, "subtype": "E7", "phi": [6]}
    assert [n["parent"] for n in j][1:] and all(isinstance(n["root"], list) for n in j)
