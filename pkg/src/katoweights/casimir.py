"""Casimir numbers, Weyl dimensions and exact trace identities.

The identities here tie three descriptions of the splitting of R^n (x) V
together: conformal weights, relative dimensions of the summands, and
partial traces of powers of the splitting operator.  All of them are
rational functions of the translated conformal weights and are evaluated
exactly; the test suite leans on the redundancy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .scalars import HalfInt, as_fraction, elementary_symmetric
from .weights import DominantWeight, is_dominant_entries

if TYPE_CHECKING:  # pragma: no cover
    from .decomposition import Decomposition

__all__ = [
    "CasimirReport",
    "delta",
    "casimir_number",
    "casimir_number_entries",
    "conformal_weight",
    "weyl_dimension",
    "relative_dimension",
    "virtual_power_sum",
    "partial_trace_powers",
    "charpoly_partial_trace",
    "casimir_report",
]

HALF = Fraction(1, 2)


def delta(n: int) -> tuple[Fraction, ...]:
    """Half-sum of positive roots of so(n): delta_i = (n - 2i)/2."""
    m = n // 2
    return tuple(Fraction(n - 2 * i, 2) for i in range(1, m + 1))


def casimir_number_entries(entries: Sequence, n: int) -> Fraction:
    """<lam, lam> + 2 <lam, delta> in the orthonormal coordinate pairing."""
    d = delta(n)
    coords = [as_fraction(e) for e in entries]
    return sum(c * c for c in coords) + 2 * sum(c * di for c, di in zip(coords, d))


def casimir_number(weight: DominantWeight) -> Fraction:
    return casimir_number_entries(weight.entries, weight.n)


def conformal_weight(target_entries: Sequence, lam: DominantWeight) -> Fraction:
    """Scalar by which the splitting operator acts on the summand with the
    given highest weight: (c(mu) - c(lam) - c(standard)) / 2."""
    n = lam.n
    c_tau = Fraction(n - 1)  # Casimir number of the standard representation
    c_mu = casimir_number_entries(target_entries, n)
    return (c_mu - casimir_number(lam) - c_tau) / 2


def weyl_dimension(entries: Sequence, n: int) -> int:
    """Dimension of the irreducible so(n) module with the given highest weight.

    Accepts a signed last entry when n is even; the two chiralities have the
    same dimension.
    """
    coords = tuple(HalfInt(e) for e in entries)
    if not is_dominant_entries(coords, n):
        raise ValueError(f"weight {tuple(str(c) for c in coords)} is not dominant for so({n})")
    d = delta(n)
    x = [c.as_fraction() + di for c, di in zip(coords, d)]
    m = n // 2
    num = Fraction(1)
    den = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            num *= x[i] * x[i] - x[j] * x[j]
            den *= d[i] * d[i] - d[j] * d[j]
    if n % 2 == 1:
        for i in range(m):
            num *= x[i]
            den *= d[i]
    dim = num / den
    if dim.denominator != 1 or dim <= 0:
        raise ValueError("Weyl dimension did not come out a positive integer")
    return dim.numerator


def relative_dimension(dec: "Decomposition", j: int) -> Fraction:
    """dim W_j / dim V as a residue formula in the translated weights.

    The sign of the linear factor flips with the parity of the number of
    summands.  For the merged middle summand this returns the sum of both
    chirality dimensions.
    """
    comps = dec.components
    if not 1 <= j <= len(comps):
        raise ValueError(f"component index {j} out of range 1..{len(comps)}")
    wt = [c.translated_weight for c in comps]
    sign = 1 if len(comps) % 2 == 1 else -1
    wj = wt[j - 1]
    value = 2 * wj + sign
    for k, wk in enumerate(wt, start=1):
        if k == j:
            continue
        value *= (wj + wk) / (wj - wk)
    return value


def virtual_power_sum(lam: DominantWeight, ell: int) -> Fraction:
    """Power sum of the 2m translated virtual conformal weights 1/2 +- x_i."""
    if ell < 0:
        raise ValueError("exponent must be >= 0")
    x = [e.as_fraction() + di for e, di in zip(lam.entries, delta(lam.n))]
    return sum((HALF + xi) ** ell + (HALF - xi) ** ell for xi in x) if x else Fraction(0)


# -- truncated power series over Fraction -----------------------------------

def _series_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        top = min(len(b), order + 1 - i)
        for k in range(top):
            out[i + k] += ai * b[k]
    return out


def _series_inv(a: list[Fraction], order: int) -> list[Fraction]:
    # Invert a power series with a(0) != 0 by forward substitution.
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / a[0]
    for k in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, min(k, len(a) - 1) + 1):
            acc += a[i] * inv[k - i]
        inv[k] = -acc / a[0]
    return inv


def partial_trace_powers(dec: "Decomposition", max_power: int) -> tuple[Fraction, ...]:
    """Partial traces of powers 0..max_power of the translated splitting
    operator, read off a rational generating series.

    The series is  t/2 + (1 - (-1)^N t/2) * prod_j (1 + wt_j t)/(1 - wt_j t);
    its t^(l+1) coefficient is the power-l partial trace (coefficient t^0 is 1).
    """
    if max_power < 0:
        raise ValueError("max_power must be >= 0")
    order = max_power + 1
    wt = [c.translated_weight for c in dec.components]
    num = [Fraction(1)]
    den = [Fraction(1)]
    for w in wt:
        num = _series_mul(num, [Fraction(1), w], order)
        den = _series_mul(den, [Fraction(1), -w], order)
    series = _series_mul(num, _series_inv(den, order), order)
    sign = -1 if len(wt) % 2 == 0 else 1
    # multiply by (1 + sign * t/2), then add t/2
    series = _series_mul(series, [Fraction(1), Fraction(sign, 2)], order)
    series[1] += HALF
    if series[0] != 1:
        raise AssertionError("generating series must start at 1")
    return tuple(series[1 : order + 1])


def charpoly_partial_trace(dec: "Decomposition", j: int) -> Fraction:
    """Partial trace of the j-th Horner partial sum of the characteristic
    polynomial of the translated splitting operator.

    Evaluated in closed form from two elementary symmetric functions and
    cross-checked against the assembly from partial_trace_powers.
    """
    if j < 0:
        raise ValueError("index must be >= 0")
    wt = [c.translated_weight for c in dec.components]
    n_comp = len(wt)
    sj = elementary_symmetric(wt, j)
    sj1 = elementary_symmetric(wt, j + 1)
    closed = (1 + (-1) ** j) * sj1 + Fraction((-1) ** j - (-1) ** n_comp, 2) * sj
    powers = partial_trace_powers(dec, j)
    assembled = sum(
        ((-1) ** ell) * elementary_symmetric(wt, ell) * powers[j - ell]
        for ell in range(j + 1)
    )
    if closed != assembled:
        raise AssertionError(
            f"partial-trace identity failed at j={j} for {dec.weight}: "
            f"{closed} != {assembled}"
        )
    return closed


@dataclass(frozen=True)
class CasimirReport:
    """Casimir number together with the shifted coordinates that produce it."""

    c_lambda: Fraction
    delta: tuple[Fraction, ...]
    x: tuple[Fraction, ...]


def casimir_report(lam: DominantWeight) -> CasimirReport:
    d = delta(lam.n)
    x = tuple(e.as_fraction() + di for e, di in zip(lam.entries, d))
    return CasimirReport(c_lambda=casimir_number(lam), delta=d, x=x)
