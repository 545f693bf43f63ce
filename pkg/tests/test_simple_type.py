import pytest
from hypothesis import given
from hypothesis import strategies as st

from cascade_kit import InvalidRank, InvalidType, SimpleType, canonical_types
from cascade_kit.simple_type import ALIASES


@given(st.sampled_from(canonical_types(12)), st.sampled_from(["{}", "{} ", " {}", "{}"]), st.booleans())
def test_parse_round_trip(t, pattern, lower):
    text = pattern.format(str(t))
    assert SimpleType.parse(text.lower() if lower else text) == t


@pytest.mark.parametrize("text", ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3"])
def test_out_of_range_ranks(text):
    with pytest.raises(InvalidRank):
        SimpleType.parse(text)


@pytest.mark.parametrize("text", ["", "X4", "E", "7", "A-1", "AA3"])
def test_unparsable(text):
    with pytest.raises(InvalidType):
        SimpleType.parse(text)


def test_canonical_list_has_no_aliases():
    types = canonical_types(12)
    assert len(types) == 47
    assert len(set(types)) == len(types)
    assert not any(str(t) in ALIASES for t in types)
    assert all(t.canonical for t in types)
    assert not SimpleType("B", 2).canonical


def test_predicates():
    assert SimpleType("A", 4).is_a_even and not SimpleType("A", 5).is_a_even
    assert SimpleType("D", 7).is_classical and not SimpleType("E", 6).is_classical
