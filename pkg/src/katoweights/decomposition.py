"""Splitting of R^n (x) V_lambda into irreducible summands with conformal weights.

The summands are indexed 1..N in strictly decreasing order of conformal
weight.  When n = 2m and lambda_m = 0, the two middle targets share one
conformal weight and are kept together as a single summand, so the weights
attached to the summands are always distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import casimir
from .scalars import HalfInt, format_rational
from .weights import DominantWeight, is_dominant_entries, profile

__all__ = [
    "VirtualWeight",
    "Component",
    "Decomposition",
    "virtual_weights",
    "decompose",
    "translated_weights",
    "to_json_dict",
]


@dataclass(frozen=True)
class VirtualWeight:
    """A candidate target weight lambda +- e_i (or lambda itself for odd n).

    ``effective`` marks the candidates that actually occur, i.e. the dominant
    ones, with the unshifted candidate occurring only in odd dimensions for
    weights with a nonzero last coordinate.
    """

    kind: str  # "plus" | "minus" | "zero"
    index: Optional[int]  # 1-based coordinate index; None for "zero"
    entries: tuple[HalfInt, ...]
    w: Fraction
    effective: bool

    def label(self) -> str:
        body = ", ".join(str(e) for e in self.entries)
        mark = {"plus": "+", "minus": "-", "zero": "0"}[self.kind]
        return f"({body}){mark}"


@dataclass(frozen=True)
class Component:
    """One summand of the splitting: one or two targets sharing a weight."""

    index: int  # 1-based position, decreasing conformal weight
    targets: tuple[VirtualWeight, ...]
    w: Fraction
    translated_weight: Fraction
    dim: int

    @property
    def merged(self) -> bool:
        return len(self.targets) == 2


@dataclass(frozen=True)
class Decomposition:
    weight: DominantWeight
    nu: int
    case: str  # "2nu-1" | "2nu" | "2nu+1"
    components: tuple[Component, ...]

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def properly_half_integral(self) -> bool:
        return not self.weight.entries[0].is_integer

    def conformal_weights(self) -> tuple[Fraction, ...]:
        return tuple(c.w for c in self.components)


def virtual_weights(lam: DominantWeight) -> tuple[VirtualWeight, ...]:
    """All 2m+1 candidate targets in structurally decreasing weight order."""
    n, m = lam.n, lam.m
    entries = lam.entries
    out: list[VirtualWeight] = []
    for i in range(1, m + 1):
        shifted = entries[: i - 1] + (entries[i - 1] + 1,) + entries[i:]
        w = Fraction(1) + entries[i - 1].as_fraction() - i
        out.append(
            VirtualWeight(
                kind="plus",
                index=i,
                entries=shifted,
                w=w,
                effective=is_dominant_entries(shifted, n),
            )
        )
    zero_effective = n % 2 == 1 and entries[-1] > 0
    out.append(
        VirtualWeight(
            kind="zero",
            index=None,
            entries=entries,
            w=Fraction(1 - n, 2),
            effective=zero_effective,
        )
    )
    for i in range(m, 0, -1):
        shifted = entries[: i - 1] + (entries[i - 1] - 1,) + entries[i:]
        w = Fraction(1 - n) - (entries[i - 1].as_fraction() - i)
        out.append(
            VirtualWeight(
                kind="minus",
                index=i,
                entries=shifted,
                w=w,
                effective=is_dominant_entries(shifted, n),
            )
        )
    return tuple(out)


def _expected_case(lam: DominantWeight) -> tuple[str, int]:
    prof = profile(lam)
    k_last = prof.block_values[-1]
    if k_last == 0:
        return "2nu-1", 2 * prof.nu - 1
    if lam.n % 2 == 0:
        return "2nu", 2 * prof.nu
    if k_last == Fraction(1, 2):
        return "2nu", 2 * prof.nu
    return "2nu+1", 2 * prof.nu + 1


@lru_cache(maxsize=None)
def decompose(lam: DominantWeight) -> Decomposition:
    """Compute the ordered splitting of R^n (x) V_lambda.

    Targets are the effective candidates sorted by decreasing conformal
    weight; an equal-weight pair (even n, last coordinate zero, next one
    positive) is stored as a single merged summand.  The result is checked
    against the block-profile case analysis and the dimension count.
    """
    n = lam.n
    effective = [v for v in virtual_weights(lam) if v.effective]
    effective.sort(key=lambda v: v.w, reverse=True)  # stable: keeps "+" before "-"

    components: list[Component] = []
    half = Fraction(n - 1, 2)
    i = 0
    while i < len(effective):
        group = [effective[i]]
        while i + 1 < len(effective) and effective[i + 1].w == effective[i].w:
            group.append(effective[i + 1])
            i += 1
        i += 1
        if len(group) == 2:
            ok = (
                n % 2 == 0
                and group[0].kind == "plus"
                and group[1].kind == "minus"
                and group[0].index == group[1].index == lam.m
                and lam.entries[-1] == 0
            )
            if not ok:
                raise AssertionError(f"unexpected weight collision in {lam}")
        elif len(group) > 2:
            raise AssertionError(f"triple weight collision in {lam}")
        dim = sum(casimir.weyl_dimension(t.entries, n) for t in group)
        w = group[0].w
        # Cross-check the coordinate formula against the Casimir definition.
        for t in group:
            if casimir.conformal_weight(t.entries, lam) != w:
                raise AssertionError(f"conformal weight mismatch for target {t.label()}")
        components.append(
            Component(
                index=len(components) + 1,
                targets=tuple(group),
                w=w,
                translated_weight=w + half,
                dim=dim,
            )
        )

    case, expected_n = _expected_case(lam)
    if len(components) != expected_n:
        raise AssertionError(
            f"{lam}: found {len(components)} summands, case analysis expects {expected_n}"
        )
    total = sum(c.dim for c in components)
    dim_v = casimir.weyl_dimension(lam.entries, n)
    if total != n * dim_v:
        raise AssertionError(f"{lam}: dimension sum {total} != {n} * {dim_v}")
    return Decomposition(
        weight=lam,
        nu=profile(lam).nu,
        case=case,
        components=tuple(components),
    )


def translated_weights(dec: Decomposition) -> tuple[Fraction, ...]:
    """Conformal weights shifted by (n-1)/2; strictly decreasing."""
    return tuple(c.translated_weight for c in dec.components)


def to_json_dict(dec: Decomposition) -> dict:
    lam = dec.weight
    out = {
        "n": lam.n,
        "lambda": [str(e) for e in lam.entries],
        "N": dec.num_components,
        "case": dec.case,
        "components": [
            {
                "j": c.index,
                "targets": [
                    {
                        "kind": t.kind,
                        "i": t.index,
                        "entries": [str(e) for e in t.entries],
                    }
                    for t in c.targets
                ],
                "w": format_rational(c.w),
                "w_tilde": format_rational(c.translated_weight),
                "dim": c.dim,
            }
            for c in dec.components
        ],
    }
    if lam.n % 2 == 0:
        out["chirality"] = lam.chirality
    return out
