"""Dominant weights of so(n): validation, normal form, block profile.

Weights are coordinate tuples in the standard orthonormal basis of the dual
Cartan subalgebra, of length m = floor(n/2).  For even n the normal form
keeps the last coordinate nonnegative and records the original sign as a
chirality flag; every quantity computed downstream is invariant under that
flip, so the flag is informational only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .scalars import HalfInt

__all__ = [
    "DominantWeight",
    "WeightProfile",
    "validate",
    "parse_weight",
    "profile",
    "is_properly_half_integral",
    "is_dominant_entries",
]

EntryLike = Union[int, Fraction, HalfInt, str]


@dataclass(frozen=True)
class DominantWeight:
    """A validated dominant weight of so(n), n >= 3, in normal form."""

    n: int
    entries: tuple[HalfInt, ...]
    chirality: int = 1

    @property
    def m(self) -> int:
        """Rank of so(n)."""
        return len(self.entries)

    @property
    def is_zero(self) -> bool:
        return all(e.twice == 0 for e in self.entries)

    def entry_fractions(self) -> tuple[Fraction, ...]:
        return tuple(e.as_fraction() for e in self.entries)

    def __str__(self) -> str:
        body = ", ".join(str(e) for e in self.entries)
        sign = "" if self.chirality > 0 else ", chirality -"
        return f"so({self.n}) weight ({body}{sign})"


@dataclass(frozen=True)
class WeightProfile:
    """Distinct entry values of a weight with their cumulative positions.

    ``block_values`` lists the nu distinct values in decreasing order and
    ``block_prefix_counts[j]`` is the number of entries >= block_values[j];
    the final prefix count equals the rank.
    """

    nu: int
    block_values: tuple[HalfInt, ...]
    block_prefix_counts: tuple[int, ...]

    def reconstruct(self) -> tuple[HalfInt, ...]:
        out: list[HalfInt] = []
        prev = 0
        for value, prefix in zip(self.block_values, self.block_prefix_counts):
            out.extend([value] * (prefix - prev))
            prev = prefix
        return tuple(out)


def _coerce_entries(entries: Iterable[EntryLike]) -> tuple[HalfInt, ...]:
    return tuple(HalfInt(e) for e in entries)


def is_dominant_entries(entries: Sequence[HalfInt], n: int) -> bool:
    """Dominance test for raw coordinates (signed last entry allowed if n even)."""
    m = n // 2
    if len(entries) != m:
        return False
    head = entries[:-1]
    for a, b in zip(head, head[1:]):
        if a < b:
            return False
    if n % 2 == 1:
        return head[-1] >= entries[-1] >= 0 if m > 1 else entries[-1] >= 0
    return m == 1 or head[-1] >= abs(entries[-1])


def validate(n: int, entries: Iterable[EntryLike]) -> DominantWeight:
    """Validate and normalize a dominant weight; raises ValueError on bad input."""
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"dimension must be an integer >= 3, got {n!r}")
    coords = _coerce_entries(entries)
    m = n // 2
    if len(coords) != m:
        raise ValueError(
            f"so({n}) weights have {m} coordinates, got {len(coords)}"
        )
    parities = {e.twice % 2 for e in coords}
    if len(parities) > 1:
        raise ValueError(
            "coordinates must be all integers or all half-odd-integers"
        )
    chirality = 1
    if n % 2 == 0 and coords[-1] < 0:
        chirality = -1
        coords = coords[:-1] + (-coords[-1],)
    # In normal form both parities share the same chain: decreasing, last >= 0.
    for a, b in zip(coords, coords[1:]):
        if a < b:
            raise ValueError(f"coordinates must be non-increasing, got {_fmt(coords)}")
    if coords[-1] < 0:
        raise ValueError("last coordinate must be >= 0 in odd dimensions")
    return DominantWeight(n=n, entries=coords, chirality=chirality)


def parse_weight(n: int, text: str) -> DominantWeight:
    """Parse a comma-separated coordinate list such as ``"3/2,1/2"``."""
    parts = [p for p in text.split(",") if p.strip() != ""]
    if not parts:
        raise ValueError("empty weight")
    return validate(n, parts)


def profile(weight: DominantWeight) -> WeightProfile:
    """Group equal coordinates into blocks k_1 > ... > k_nu with prefix counts."""
    values: list[HalfInt] = []
    prefixes: list[int] = []
    for pos, entry in enumerate(weight.entries, start=1):
        if values and entry == values[-1]:
            prefixes[-1] = pos
        else:
            values.append(entry)
            prefixes.append(pos)
    return WeightProfile(
        nu=len(values),
        block_values=tuple(values),
        block_prefix_counts=tuple(prefixes),
    )


def is_properly_half_integral(weight: DominantWeight) -> bool:
    """True when every coordinate is a half-odd-integer (spinor-type weight)."""
    return not weight.entries[0].is_integer


def _fmt(coords: Sequence[HalfInt]) -> str:
    return "(" + ", ".join(str(c) for c in coords) + ")"
