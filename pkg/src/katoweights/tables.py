"""Constant tables for dimensions 3 and 4.

Irreducible modules are indexed by symmetric powers of the (half-)spin
representations: one parameter r in dimension 3 (weight r/2), a pair
r >= s >= 0 in dimension 4 (weight ((r+s)/2, (r-s)/2)).  Each table row
carries the engine value and the published closed formula in r, s so the
two can be diffed cell by cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .decomposition import Decomposition, decompose
from .kato import half_integral_sharp_constants, kato_constant
from .scalars import sqrt_string
from .weights import validate

__all__ = ["TableRow", "dim3_weight", "dim4_weight", "dim3_table", "dim4_table"]


@dataclass(frozen=True)
class TableRow:
    operator: str
    condition: str
    r: int
    s: Optional[int]
    index_set: frozenset[int]
    k_squared: Fraction  # engine value
    formula_k_squared: Fraction  # published closed form in r, s

    @property
    def k_string(self) -> str:
        return sqrt_string(self.k_squared)


def dim3_weight(r: int) -> Decomposition:
    """Splitting for the r-th symmetric power of the spin module of so(3)."""
    if r < 0:
        raise ValueError("parameter must be >= 0")
    return decompose(validate(3, [Fraction(r, 2)]))


def dim4_weight(r: int, s: int) -> Decomposition:
    """Splitting for the so(4) module with half-spin powers r >= s >= 0."""
    if not r >= s >= 0:
        raise ValueError("need r >= s >= 0")
    return decompose(validate(4, [Fraction(r + s, 2), Fraction(r - s, 2)]))


def dim3_table(rmax: int = 8) -> list[TableRow]:
    rows: list[TableRow] = []
    for r in range(1, rmax + 1):
        dec = dim3_weight(r)
        rows.append(
            TableRow(
                operator="twistor",
                condition="all r",
                r=r,
                s=None,
                index_set=frozenset({1}),
                k_squared=kato_constant(dec, {1}).k_squared,
                formula_k_squared=Fraction(r, r + 2),
            )
        )
        if r == 1:
            rows.append(
                TableRow(
                    operator="dirac",
                    condition="r = 1",
                    r=r,
                    s=None,
                    index_set=frozenset({2}),
                    k_squared=kato_constant(dec, {2}).k_squared,
                    formula_k_squared=Fraction(2, 3),
                )
            )
        if r >= 2:
            rows.append(
                TableRow(
                    operator="dirac-type",
                    condition="r >= 2",
                    r=r,
                    s=None,
                    index_set=frozenset({2, 3}),
                    k_squared=kato_constant(dec, {2, 3}).k_squared,
                    formula_k_squared=Fraction(r + 2, 2 * (r + 1)),
                )
            )
        if r >= 3 and r % 2 == 1:
            rows.append(
                TableRow(
                    operator="rarita-schwinger",
                    condition="r odd, r >= 3",
                    r=r,
                    s=None,
                    index_set=frozenset({2}),
                    k_squared=half_integral_sharp_constants(dec).k2_middle,
                    formula_k_squared=1 - Fraction(1, r * (r + 2)),
                )
            )
    return rows


def dim4_table(rmax: int = 8) -> list[TableRow]:
    rows: list[TableRow] = []
    for r in range(0, rmax + 1):
        for s in range(0, r + 1):
            dec = dim4_weight(r, s)
            rows.append(
                TableRow(
                    operator="twistor",
                    condition="r >= s >= 0",
                    r=r,
                    s=s,
                    index_set=frozenset({1}),
                    k_squared=kato_constant(dec, {1}).k_squared,
                    formula_k_squared=Fraction(2 * r * s + r + s, 2 * (r + 1) * (s + 1)),
                )
            )
            if r > s:
                # N = 2 when s = 0, N = 4 otherwise; spin-(r+s)/2 field
                index_set = frozenset({2}) if s == 0 else frozenset({3})
                rows.append(
                    TableRow(
                        operator="spin-field",
                        condition="r > s >= 0",
                        r=r,
                        s=s,
                        index_set=index_set,
                        k_squared=kato_constant(dec, index_set).k_squared,
                        formula_k_squared=Fraction(
                            2 * r * s + r + 3 * s + 2, 2 * (r + 1) * (s + 1)
                        ),
                    )
                )
            if s > 0:
                index_set = frozenset({2, 3}) if r == s else frozenset({2, 4})
                rows.append(
                    TableRow(
                        operator="dirac-type",
                        condition="r >= s > 0",
                        r=r,
                        s=s,
                        index_set=index_set,
                        k_squared=kato_constant(dec, index_set).k_squared,
                        formula_k_squared=Fraction(s + 2, 2 * (s + 1)),
                    )
                )
    return rows
