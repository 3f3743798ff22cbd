"""Exact refined Kato constants for sums of generalized gradients.

For a unit decomposable tensor the squared projection norms onto the N
summands are affine functions of roughly half as many quadratic invariants,
constrained to a compact polytope whose vertices are indexed by the choice
sets of ``ne_sets``.  The constant for an index set I is the extremum over
those vertices of the total squared norm escaping I, evaluated here in exact
rational arithmetic, together with the algebraic equality case.

The closed-form evaluator re-derives the same constants from the published
per-case formulas (choice of extremal vertex made explicit) and is kept
independent so the two routes can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import sqrt
from typing import Iterable, Optional

from .decomposition import Decomposition
from .ellipticity import (
    index_pairs,
    is_elliptic,
    ne_sets,
    unpaired_middle_index,
    validate_subset,
)
from .scalars import elementary_symmetric

__all__ = [
    "VertexPoint",
    "EqualityCase",
    "KatoResult",
    "SharpenedConstants",
    "PlusMinusConstants",
    "norms_at",
    "vertex_point",
    "vertex_points",
    "kato_constant",
    "closed_form",
    "half_integral_sharp_constants",
    "plus_minus_constants",
    "coordinate_bounds",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class VertexPoint:
    """A vertex of the admissible region of quadratic invariants.

    ``vanishing`` is the choice set J whose projection norms are zero there,
    ``coords`` the invariant values Q_2.. at the vertex, and ``norms`` the
    squared projection norm of every summand index.
    """

    vanishing: frozenset[int]
    coords: tuple[Fraction, ...]
    norms: dict[int, Fraction]


@dataclass(frozen=True)
class EqualityCase:
    """Algebraic description of equality: the derivative lands in the
    gradient_set summands while the vanishing_set projections are zero."""

    vanishing_set: frozenset[int]
    gradient_set: frozenset[int]


@dataclass(frozen=True)
class KatoResult:
    k_squared: Fraction
    sharp: bool
    elliptic: bool
    extremal_set: frozenset[int]
    equality: EqualityCase

    @property
    def k(self) -> float:
        return sqrt(float(self.k_squared))


def _middle_slot(dec: Decomposition) -> int:
    """Number of '+'-type slots: N odd -> (N+1)/2, N even -> N/2."""
    n_comp = dec.num_components
    return (n_comp + 1) // 2 if n_comp % 2 else n_comp // 2


def _check_choice_set(dec: Decomposition, J: frozenset[int]) -> None:
    pairs = index_pairs(dec)
    chosen = set()
    for a, b in pairs:
        hits = J & {a, b}
        if len(hits) != 1:
            raise ValueError(f"{sorted(J)} does not choose exactly one of {{{a},{b}}}")
        chosen |= hits
    if J != chosen:
        raise ValueError(f"{sorted(J)} contains indices outside the symmetric pairs")


def norms_at(dec: Decomposition, J: Iterable[int]) -> dict[int, Fraction]:
    """Squared projection norms at the invariant point determined by any
    index set J of choice cardinality: the i-th norm is the product of
    (wt_i^2 - wt_j^2) over J divided by the full difference product, with an
    extra (wt_i - 1/2) when N is even.  Norms of J members vanish; the total
    is always 1, but norms can be negative when the point is infeasible."""
    J = frozenset(J)
    wt = {c.index: c.translated_weight for c in dec.components}
    n_comp = dec.num_components
    if len(J) != len(index_pairs(dec)):
        raise ValueError("index set must have the choice cardinality")
    even = n_comp % 2 == 0
    norms: dict[int, Fraction] = {}
    for i in range(1, n_comp + 1):
        num = Fraction(1)
        for j in J:
            num *= wt[i] ** 2 - wt[j] ** 2
        den = Fraction(1)
        for j in range(1, n_comp + 1):
            if j != i:
                den *= wt[i] - wt[j]
        value = num / den
        if even:
            value *= wt[i] - HALF
        norms[i] = value
    if sum(norms.values()) != 1:
        raise AssertionError(f"norms must sum to 1 at J={sorted(J)}")
    return norms


def vertex_point(dec: Decomposition, J: Iterable[int]) -> VertexPoint:
    """Evaluate all squared projection norms at the vertex killed by J."""
    J = frozenset(J)
    _check_choice_set(dec, J)
    wt = {c.index: c.translated_weight for c in dec.components}
    norms = norms_at(dec, J)
    top = _middle_slot(dec)
    squares = [wt[j] ** 2 for j in sorted(J)]
    coords = tuple(elementary_symmetric(squares, k - 1) for k in range(2, top + 1))
    return VertexPoint(vanishing=J, coords=coords, norms=norms)


@lru_cache(maxsize=None)
def vertex_points(dec: Decomposition) -> tuple[VertexPoint, ...]:
    return tuple(vertex_point(dec, J) for J in ne_sets(dec))


def kato_constant(dec: Decomposition, indices: Iterable[int]) -> KatoResult:
    """Squared Kato constant for the gradient sum over ``indices``.

    Maximizes the escaped squared norm over the vertex family and checks the
    complementary minimization gives the same value.  Extremal-vertex ties
    break to the lexicographically smallest choice set.  The result is not
    sharp exactly when N = 2nu+1, the weight is properly half-integral and
    the extremal choice set contains the middle slot nu+1.
    """
    subset = validate_subset(dec, indices)
    report = is_elliptic(dec, subset)
    n_comp = dec.num_components
    complement = frozenset(range(1, n_comp + 1)) - subset

    best_val = best_key = None
    min_val = None
    for vp in vertex_points(dec):
        escaped = sum((vp.norms[i] for i in complement), Fraction(0))
        inside = sum((vp.norms[i] for i in subset), Fraction(0))
        if escaped + inside != 1:
            raise AssertionError("vertex norms split inconsistently")
        key = tuple(sorted(vp.vanishing))
        if best_val is None or escaped > best_val or (escaped == best_val and key < best_key):
            best_val, best_key = escaped, key
        if min_val is None or inside < min_val:
            min_val = inside
    if best_val != 1 - min_val:
        raise AssertionError("max and min forms of the constant disagree")
    if not 0 <= best_val <= 1:
        raise AssertionError(f"constant {best_val} outside [0, 1]")

    extremal = frozenset(best_key)
    exceptional = (
        dec.case == "2nu+1"
        and dec.properly_half_integral
        and dec.nu + 1 in extremal
    )
    if not report.elliptic and best_val != 1:
        raise AssertionError("non-elliptic sums must have constant 1")
    if report.elliptic and best_val == 1 and not exceptional:
        raise AssertionError("elliptic sums must have constant < 1")
    return KatoResult(
        k_squared=best_val,
        sharp=not exceptional,
        elliptic=report.elliptic,
        extremal_set=extremal,
        equality=EqualityCase(
            vanishing_set=extremal,
            gradient_set=complement - extremal,
        ),
    )


# -- closed forms ------------------------------------------------------------


@dataclass(frozen=True)
class SharpenedConstants:
    """Improved squared constants for the properly half-integral N=3 case,
    from the eigenvalue gap of the restricted quadratic invariant."""

    k2_middle: Fraction  # I = {2}
    k2_middle_bottom: Fraction  # I = {2, 3}
    k2_top_middle: Fraction  # I = {1, 2}


def half_integral_sharp_constants(dec: Decomposition) -> SharpenedConstants:
    lam = dec.weight
    if dec.num_components != 3 or dec.nu != 1 or not dec.properly_half_integral:
        raise ValueError(
            "sharpened constants apply only to N=3 splittings of a properly "
            "half-integral weight with all coordinates equal"
        )
    k = lam.entries[0].as_fraction()
    n = lam.n
    return SharpenedConstants(
        k2_middle=1 - 1 / (2 * k * (2 * k + n - 1)),
        k2_middle_bottom=((2 * k + n - 1) ** 2 - 1) / ((2 * k + n - 1) * (4 * k + n - 1)),
        k2_top_middle=(k ** 2 - 1) / (k * (4 * k + n - 1)),
    )


def _wt_map(dec: Decomposition) -> dict[int, Fraction]:
    return {c.index: c.translated_weight for c in dec.components}


def _vertex_term(dec: Decomposition, i: int, J: frozenset[int]) -> Fraction:
    """Printed form of the squared norm of summand i at the vertex of J,
    written with the pair partner pulled out."""
    wt = _wt_map(dec)
    n_comp = dec.num_components
    even = n_comp % 2 == 0
    middle = unpaired_middle_index(dec)
    if i == 1:
        value = Fraction(1)
        for j in J:
            value *= (wt[1] + wt[j]) / (wt[1] - wt[n_comp + 2 - j])
        if even:
            value *= (wt[1] - HALF) / (wt[1] - wt[middle])
        return value
    if even and i == middle:
        value = (wt[i] - HALF) / (wt[i] - wt[1])
        for j in J:
            value *= (wt[i] + wt[j]) / (wt[i] - wt[n_comp + 2 - j])
        return value
    partner = n_comp + 2 - i
    if partner not in J:
        raise AssertionError("vertex term requires the pair partner in J")
    value = (wt[i] + wt[partner]) / (wt[i] - wt[1])
    for j in J - {partner}:
        value *= (wt[i] + wt[j]) / (wt[i] - wt[n_comp + 2 - j])
    if even:
        value *= (wt[i] - HALF) / (wt[i] - wt[middle])
    return value


def _j_max(dec: Decomposition, i: int) -> frozenset[int]:
    """Choice set maximizing the norm of summand i (i neither 1 nor middle)."""
    n_comp = dec.num_components
    top = _middle_slot(dec)
    if i > top + (0 if n_comp % 2 else 1):
        return _j_max(dec, n_comp + 1 - i)
    return frozenset(range(i + 1, top + 1)) | frozenset(range(n_comp + 2 - i, n_comp + 1))


def _j_zero(dec: Decomposition, i: int) -> frozenset[int]:
    """Free indices compatible with the pair pattern {i, N+2-i}."""
    n_comp = dec.num_components
    top = _middle_slot(dec)
    return frozenset(range(2, i)) | frozenset(
        n_comp + 2 - j for j in range(i + 1, top + 1)
    )


def closed_form(dec: Decomposition, indices: Iterable[int]) -> Optional[Fraction]:
    """Squared constant from the published per-case formulas, or None.

    Every case that matches the index set is evaluated and all matches must
    agree.  For the properly half-integral N=3 splitting the three sharpened
    constants take precedence over the generic (then non-sharp) formulas.
    """
    subset = validate_subset(dec, indices)
    n_comp = dec.num_components
    full = frozenset(range(1, n_comp + 1))
    complement = full - subset
    wt = _wt_map(dec)
    w = {c.index: c.w for c in dec.components}
    n = dec.weight.n

    if n_comp == 3 and dec.properly_half_integral:
        trio = half_integral_sharp_constants(dec)
        special = {
            frozenset({2}): trio.k2_middle,
            frozenset({2, 3}): trio.k2_middle_bottom,
            frozenset({1, 2}): trio.k2_top_middle,
        }
        if subset in special:
            return special[subset]

    matches: dict[str, Fraction] = {}

    if n_comp == 2:
        if subset == {1}:
            matches["N2-top"] = w[1] / (w[1] - w[2])
        elif subset == {2}:
            matches["N2-bottom"] = -w[2] / (w[1] - w[2])

    if n_comp == 3:
        if subset in ({1}, {1, 3}):
            matches["N3-top"] = w[1] / (w[1] - w[2])
        if subset == {2, 3}:
            matches["N3-bottom-pair"] = -w[3] / (w[1] - w[3])
        if subset == {1, 2}:
            matches["N3-top-pair"] = w[1] / (w[1] - w[3])

    if n_comp == 4:
        half_shift = Fraction(n - 2, 2)
        if subset == {1}:
            matches["N4-top"] = 1 - (w[1] + half_shift) * (w[1] + w[4] + n - 1) / (
                (w[1] - w[2]) * (w[1] - w[3])
            )
        if subset == {3}:
            matches["N4-middle"] = 1 - (w[3] + half_shift) * (w[3] + w[2] + n - 1) / (
                (w[3] - w[4]) * (w[3] - w[1])
            )
        if subset == {2, 4}:
            matches["N4-pair"] = 1 - min(
                (w[4] + half_shift) * (w[2] + w[4] + n - 1) / ((w[4] - w[1]) * (w[4] - w[3])),
                (w[2] + half_shift) * (w[2] + w[4] + n - 1) / ((w[2] - w[1]) * (w[2] - w[3])),
            )

    top = _middle_slot(dec)
    middle = unpaired_middle_index(dec)

    if n_comp >= 3 and n_comp % 2 == 1:
        upper = frozenset(range(top + 1, n_comp + 1))
        if {1} <= subset <= {1} | upper:
            matches["odd-i"] = 1 - _vertex_term(dec, 1, upper)
        for i in range(2, top + 1):
            pair = frozenset({i, n_comp + 2 - i})
            j0 = _j_zero(dec, i)
            if pair <= subset <= pair | j0:
                c1 = _vertex_term(dec, i, j0 | {n_comp + 2 - i})
                c2 = _vertex_term(dec, n_comp + 2 - i, j0 | {i})
                matches["odd-ii"] = 1 - min(c1, c2)
        if subset == full - {1}:
            matches["odd-iii"] = _vertex_term(dec, 1, frozenset(range(2, top + 1)))
        if len(complement) == 1:
            (i,) = complement
            if i != 1:
                matches["odd-iv"] = _vertex_term(dec, i, _j_max(dec, i))
        if subset == full - {1, n_comp} and n_comp >= 3:
            low = frozenset(range(2, top + 1))
            matches["odd-v"] = _vertex_term(dec, n_comp, low) + _vertex_term(dec, 1, low)
        if len(complement) == 2:
            i = min(complement)
            if complement == {i, n_comp + 1 - i} and 2 <= i <= top - 1:
                jm = _j_max(dec, i)
                matches["odd-vi"] = _vertex_term(dec, i, jm) + _vertex_term(
                    dec, n_comp + 1 - i, jm
                )

    if n_comp >= 4 and n_comp % 2 == 0:
        upper = frozenset(range(top + 2, n_comp + 1))
        lower = frozenset(range(2, top + 1))
        if {1} <= subset <= {1} | upper:
            matches["even-i"] = 1 - _vertex_term(dec, 1, upper)
        if {middle} <= subset <= lower | {middle}:
            matches["even-ii"] = 1 - _vertex_term(dec, middle, lower)
        for i in range(2, top + 1):
            pair = frozenset({i, n_comp + 2 - i})
            j0 = _j_zero(dec, i)
            if pair <= subset <= pair | j0:
                c1 = _vertex_term(dec, i, j0 | {n_comp + 2 - i})
                c2 = _vertex_term(dec, n_comp + 2 - i, j0 | {i})
                matches["even-iii"] = 1 - min(c1, c2)
        if subset == full - {1}:
            matches["even-iv"] = _vertex_term(dec, 1, lower)
        if subset == full - {middle}:
            matches["even-v"] = _vertex_term(dec, middle, upper)
        if len(complement) == 1:
            (i,) = complement
            if i not in (1, middle):
                matches["even-vi"] = _vertex_term(dec, i, _j_max(dec, i))
        if subset == full - {1, n_comp}:
            matches["even-vii"] = _vertex_term(dec, 1, lower) + _vertex_term(
                dec, n_comp, lower
            )
        if complement == {top, middle}:
            matches["even-viii"] = _vertex_term(dec, top, upper) + _vertex_term(
                dec, middle, upper
            )
        if len(complement) == 2:
            i = min(complement)
            if complement == {i, n_comp + 1 - i} and 2 <= i <= top - 1:
                jm = _j_max(dec, i)
                matches["even-ix"] = _vertex_term(dec, i, jm) + _vertex_term(
                    dec, n_comp + 1 - i, jm
                )

    if not matches:
        return None
    values = set(matches.values())
    if len(values) != 1:
        raise AssertionError(
            f"closed-form cases disagree for I={sorted(subset)} on {dec.weight}: {matches}"
        )
    return values.pop()


@dataclass(frozen=True)
class PlusMinusConstants:
    """Squared constants for the sums of all positive / all negative
    conformal-weight gradients (valid when no conformal weight vanishes)."""

    k2_plus: Fraction
    k2_minus: Fraction


def plus_minus_constants(dec: Decomposition) -> PlusMinusConstants:
    ws = [c.w for c in dec.components]
    if any(x == 0 for x in ws):
        raise ValueError("a conformal weight vanishes; the split estimate needs all nonzero")
    negatives = [x for x in ws if x < 0]
    positives = [x for x in ws if x > 0]
    if not negatives or not positives:
        raise ValueError("need both positive and negative conformal weights")
    w_max_neg = max(negatives)
    w_min_pos = min(positives)
    return PlusMinusConstants(
        k2_plus=ws[0] / (ws[0] - w_max_neg),
        k2_minus=ws[-1] / (ws[-1] - w_min_pos),
    )


def coordinate_bounds(dec: Decomposition) -> tuple[tuple[Fraction, Fraction], ...]:
    """Per-coordinate bounds on the quadratic invariants Q_2..: the lower
    bound uses the squares of the upper-slot weights, the upper bound the
    squares of the lower slots (skipping the middle slot when N is even)."""
    n_comp = dec.num_components
    if n_comp < 3:
        raise ValueError("bounds are defined for three or more summands")
    wt = _wt_map(dec)
    top = _middle_slot(dec)
    lower_sq = [wt[j] ** 2 for j in range(2, top + 1)]
    first_upper = top + 1 if n_comp % 2 else top + 2
    upper_sq = [wt[j] ** 2 for j in range(first_upper, n_comp + 1)]
    return tuple(
        (elementary_symmetric(lower_sq, k - 1), elementary_symmetric(upper_sq, k - 1))
        for k in range(2, top + 1)
    )
