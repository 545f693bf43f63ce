"""Cartan types of simple Lie algebras."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidRank, InvalidType

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# Labels that name an algebra already covered by another family.
ALIASES = {"B1": "A1", "C1": "A1", "D1": "A1", "D2": "A1+A1", "B2": "C2", "D3": "A3"}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family in _MIN_RANK:
            if self.rank < _MIN_RANK[self.family]:
                raise InvalidRank(f"{self.family}{self.rank}: rank must be >= {_MIN_RANK[self.family]}")
        elif self.family in _EXCEPTIONAL:
            if self.rank not in _EXCEPTIONAL[self.family]:
                raise InvalidRank(f"no exceptional type {self.family}{self.rank}")
        else:
            raise InvalidType(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])[_ ]?\{?(\d+)\}?\s*", text)
        if not m:
            raise InvalidType(f"cannot parse type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"

    @property
    def is_a_even(self) -> bool:
        """True for A_{2p}, the one series where the cascade element is not a coweight."""
        return self.family == "A" and self.rank % 2 == 0

    @property
    def canonical(self) -> bool:
        return str(self) not in ALIASES


def canonical_types(max_rank: int = 12) -> list[SimpleType]:
    """Every simple type once: classical families up to max_rank, then all exceptional ones."""
    out = [SimpleType("A", n) for n in range(1, max_rank + 1)]
    out += [SimpleType("B", n) for n in range(3, max_rank + 1)]
    out += [SimpleType("C", n) for n in range(2, max_rank + 1)]
    out += [SimpleType("D", n) for n in range(4, max_rank + 1)]
    out += [SimpleType("E", 6), SimpleType("E", 7), SimpleType("E", 8), SimpleType("F", 4), SimpleType("G", 2)]
    return out
