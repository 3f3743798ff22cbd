"""Exhaustive exact verification suites over weight grids.

Each suite sweeps every dominant weight (both integrality classes) up to a
dimension and coordinate bound and checks one family of identities with
exact arithmetic.  Suites return a result object with a check count and the
list of failures; the command-line ``verify`` subcommand and the acceptance
tests both run them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import casimir, ellipticity, kato
from .decomposition import decompose, translated_weights, virtual_weights
from .scalars import power_sum
from .weights import DominantWeight, profile, validate

__all__ = [
    "SuiteResult",
    "weight_grid",
    "suite_decomposition",
    "suite_identities",
    "suite_dual",
    "suite_vertex",
    "suite_ellipticity",
    "suite_closedform",
    "run_suite",
    "SUITES",
]

HALF = Fraction(1, 2)


@dataclass
class SuiteResult:
    name: str
    checks: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] suite {self.name}: {self.checks} checks, {len(self.failures)} failures"


class _Recorder:
    def __init__(self, name: str, cap: int = 25):
        self.result = SuiteResult(name=name, checks=0, failures=[])
        self.cap = cap

    def check(self, ok: bool, message: Callable[[], str]) -> None:
        self.result.checks += 1
        if not ok and len(self.result.failures) < self.cap:
            self.result.failures.append(message())

    def run(self, fn: Callable[[], bool], message: Callable[[], str]) -> None:
        try:
            self.check(fn(), message)
        except Exception as exc:  # count raised assertions as failures
            self.result.checks += 1
            if len(self.result.failures) < self.cap:
                self.result.failures.append(f"{message()}: {exc}")


def weight_grid(
    n_max: int, max_entry: Fraction, n_min: int = 3
) -> Iterator[DominantWeight]:
    """All normalized dominant weights with n_min <= n <= n_max and every
    coordinate bounded by max_entry, in both integrality classes."""
    max_entry = Fraction(max_entry)
    for n in range(n_min, n_max + 1):
        m = n // 2
        int_values = [Fraction(k) for k in range(int(max_entry), -1, -1)]
        half_values = []
        v = Fraction(1, 2)
        while v <= max_entry:
            half_values.append(v)
            v += 1
        half_values.reverse()
        for values in (int_values, half_values):
            for combo in itertools.combinations_with_replacement(values, m):
                yield validate(n, combo)


def _subsets(n_comp: int) -> Iterator[frozenset[int]]:
    indices = range(1, n_comp + 1)
    for size in range(1, n_comp + 1):
        for combo in itertools.combinations(indices, size):
            yield frozenset(combo)


def suite_decomposition(n_max: int = 10, max_entry: Fraction = Fraction(4)) -> SuiteResult:
    """Structure of the splitting: dimension count, virtual-weight ordering,
    cancellation, pair sums and the ordering comparisons between paired
    slots."""
    rec = _Recorder("decomposition")
    for lam in weight_grid(n_max, max_entry):
        dec = decompose(lam)
        n = lam.n
        dim_v = casimir.weyl_dimension(lam.entries, n)
        rec.check(
            sum(c.dim for c in dec.components) == n * dim_v,
            lambda: f"{lam}: dimension sum",
        )
        virtuals = virtual_weights(lam)
        m = lam.m
        plus = [v for v in virtuals if v.kind == "plus"]
        minus = {v.index: v for v in virtuals if v.kind == "minus"}
        chain = [v.w for v in plus] + [minus[i].w for i in range(m, 0, -1)]
        strict = all(a > b for a, b in zip(chain, chain[1:])) or (
            n % 2 == 0
            and lam.entries[-1] == 0
            and all(
                a > b if k != m - 1 else a >= b
                for k, (a, b) in enumerate(zip(chain, chain[1:]))
            )
        )
        rec.check(strict, lambda: f"{lam}: virtual chain ordering")
        for i in range(1, m):
            if lam.entries[i - 1] == lam.entries[i]:
                total = plus[i].w + minus[i].w + (n - 1)
                rec.check(
                    total == 0,
                    lambda: f"{lam}: cancellation at i={i}",
                )
        # translated pair sums: negative, and equal to the block-value gaps
        wt = translated_weights(dec)
        prof = profile(lam)
        pairs = ellipticity.index_pairs(dec)
        for idx, (a, b) in enumerate(pairs, start=2):
            total = wt[a - 1] + wt[b - 1]
            if dec.case == "2nu+1" and a == dec.nu + 1:
                expected = -lam.entries[-1].as_fraction()
            else:
                expected = (
                    prof.block_values[idx - 1].as_fraction()
                    - prof.block_values[idx - 2].as_fraction()
                )
            rec.check(
                total == expected and total < 0,
                lambda: f"{lam}: pair sum at {a},{b}",
            )
        # ordering comparisons between a slot and a pair
        n_comp = dec.num_components
        for a, b in pairs:
            for i in range(1, n_comp + 1):
                if i in (a, b):
                    continue
                lhs = (wt[i - 1] + wt[a - 1]) / (wt[i - 1] - wt[b - 1])
                rhs = (wt[i - 1] + wt[b - 1]) / (wt[i - 1] - wt[a - 1])
                if i < a or b < i:
                    ok = lhs > rhs > 0
                else:
                    ok = rhs > lhs > 0
                rec.check(ok, lambda: f"{lam}: slot comparison i={i} pair=({a},{b})")
    return rec.result


def suite_identities(n_max: int = 11, max_entry: Fraction = Fraction(7, 2)) -> SuiteResult:
    """Power-sum and trace identities: linear and cubic sum rules, the
    virtual power-sum identity for odd exponents <= 9, relative-dimension
    contraction and the Weyl-ratio equality, and the closed-form partial
    traces against their series assembly for indices <= 8."""
    rec = _Recorder("identities")
    for lam in weight_grid(n_max, max_entry):
        dec = decompose(lam)
        n = lam.n
        n_comp = dec.num_components
        wt = translated_weights(dec)
        shift = Fraction(n - 1, 2)
        parity_term = HALF if n_comp % 2 == 0 else Fraction(0)
        rec.check(
            power_sum(wt, 1) - parity_term - shift == 0,
            lambda: f"{lam}: linear sum rule",
        )
        rec.check(
            power_sum(wt, 3) - parity_term ** 3 - shift ** 3
            == 3 * casimir.casimir_number(lam),
            lambda: f"{lam}: cubic sum rule",
        )
        zero_weight = validate(n, [0] * lam.m)
        for ell in range(1, 10, 2):
            lhs = power_sum(wt, ell) - shift ** ell - parity_term ** ell
            rhs = casimir.virtual_power_sum(lam, ell) - casimir.virtual_power_sum(
                zero_weight, ell
            )
            rec.check(lhs == rhs, lambda: f"{lam}: virtual power sum, exponent {ell}")
        dim_v = casimir.weyl_dimension(lam.entries, n)
        rel = [casimir.relative_dimension(dec, j) for j in range(1, n_comp + 1)]
        rec.check(sum(rel) == n, lambda: f"{lam}: relative-dimension contraction")
        for j, comp in enumerate(dec.components, start=1):
            rec.check(
                rel[j - 1] == Fraction(comp.dim, dim_v),
                lambda: f"{lam}: Weyl ratio at j={j}",
            )
        for j in range(0, 9):
            rec.run(
                lambda j=j: casimir.charpoly_partial_trace(dec, j) is not None,
                lambda j=j: f"{lam}: partial trace at j={j}",
            )
    return rec.result


def suite_dual(n_max: int = 9, max_entry: Fraction = Fraction(3)) -> SuiteResult:
    """Max-form equals one-minus-min-form for every index set (checked inside
    the constant evaluation, together with range and ellipticity coupling)."""
    rec = _Recorder("dual")
    for lam in weight_grid(n_max, max_entry):
        dec = decompose(lam)
        for subset in _subsets(dec.num_components):
            rec.run(
                lambda s=subset: kato.kato_constant(dec, s) is not None,
                lambda s=subset: f"{lam}: I={sorted(s)}",
            )
    return rec.result


def suite_vertex(n_max: int = 9, max_entry: Fraction = Fraction(3)) -> SuiteResult:
    """Vertex geometry: norms sum to one and are nonnegative on the choice
    family (tracking the half-integral exception), and every elliptic index
    set of choice cardinality produces a negative norm somewhere."""
    rec = _Recorder("vertex")
    for lam in weight_grid(n_max, max_entry):
        dec = decompose(lam)
        n_comp = dec.num_components
        exceptional_middle = (
            dec.nu + 1 if dec.case == "2nu+1" and dec.properly_half_integral else None
        )
        for vp in kato.vertex_points(dec):
            rec.check(
                sum(vp.norms.values()) == 1,
                lambda: f"{lam}: norms at J={sorted(vp.vanishing)} do not sum to 1",
            )
            if exceptional_middle is not None and exceptional_middle in vp.vanishing:
                continue  # feasibility not asserted in the exceptional family
            rec.check(
                all(v >= 0 for v in vp.norms.values()),
                lambda: f"{lam}: infeasible vertex J={sorted(vp.vanishing)}",
            )
        size = len(ellipticity.index_pairs(dec))
        if size == 0:
            continue
        for J in itertools.combinations(range(1, n_comp + 1), size):
            J = frozenset(J)
            if not ellipticity.is_elliptic(dec, J).elliptic:
                continue
            if exceptional_middle is not None and exceptional_middle in J:
                continue
            norms = kato.norms_at(dec, J)
            rec.check(
                any(v < 0 for v in norms.values()),
                lambda: f"{lam}: elliptic J={sorted(J)} has no negative norm",
            )
    return rec.result


def suite_ellipticity(n_max: int = 9, max_entry: Fraction = Fraction(3)) -> SuiteResult:
    """Classification coherence for N <= 6: the two containment routes agree
    for every index set, both sign-split sets are elliptic, the choice family
    is non-elliptic except for the documented exception, and the branching
    necessary condition holds on minimal elliptic sets (n >= 4)."""
    rec = _Recorder("ellipticity")
    for lam in weight_grid(n_max, max_entry):
        dec = decompose(lam)
        if dec.num_components <= 6:
            for subset in _subsets(dec.num_components):
                rec.run(
                    lambda s=subset: ellipticity.is_elliptic(dec, s) is not None,
                    lambda s=subset: f"{lam}: routes at I={sorted(s)}",
                )
        nonneg = frozenset(c.index for c in dec.components if c.w >= 0)
        nonpos = frozenset(c.index for c in dec.components if c.w <= 0)
        for name, s in (("w>=0", nonneg), ("w<=0", nonpos)):
            rec.check(
                ellipticity.is_elliptic(dec, s).elliptic,
                lambda: f"{lam}: sign-split set {name} not elliptic",
            )
        exceptional_middle = (
            dec.nu + 1 if dec.case == "2nu+1" and dec.properly_half_integral else None
        )
        for J in ellipticity.ne_sets(dec):
            if not J:
                continue
            verdict = ellipticity.is_elliptic(dec, J).elliptic
            expected = exceptional_middle is not None and exceptional_middle in J
            rec.check(
                verdict == expected,
                lambda: f"{lam}: choice set J={sorted(J)} classified {verdict}",
            )
        if lam.n >= 4:
            for M in ellipticity.minimal_elliptic_sets(dec):
                rec.check(
                    ellipticity.check_nonelliptic_necessary(dec, M),
                    lambda: f"{lam}: necessary condition fails on {sorted(M)}",
                )
    return rec.result


def suite_closedform(n_max: int = 9, max_entry: Fraction = Fraction(3)) -> SuiteResult:
    """Published per-case formulas against the vertex-scan value on every
    matched pattern; the three sharpened half-integral constants must not
    exceed the (then non-sharp) scan value."""
    rec = _Recorder("closedform")
    for lam in weight_grid(n_max, max_entry):
        dec = decompose(lam)
        sharpened = dec.num_components == 3 and dec.properly_half_integral
        for subset in _subsets(dec.num_components):
            cf = kato.closed_form(dec, subset)
            if cf is None:
                continue
            value = kato.kato_constant(dec, subset).k_squared
            if sharpened and subset in (
                frozenset({2}),
                frozenset({2, 3}),
                frozenset({1, 2}),
            ):
                rec.check(
                    cf <= value,
                    lambda s=subset: f"{lam}: sharpened value above scan at I={sorted(s)}",
                )
            else:
                rec.check(
                    cf == value,
                    lambda s=subset: f"{lam}: closed form != scan at I={sorted(s)}",
                )
    return rec.result


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "decomposition": suite_decomposition,
    "identities": suite_identities,
    "dual": suite_dual,
    "vertex": suite_vertex,
    "ellipticity": suite_ellipticity,
    "closedform": suite_closedform,
}


def run_suite(name: str) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name]()
