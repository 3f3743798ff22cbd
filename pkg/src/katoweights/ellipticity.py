"""Injective ellipticity of gradient sums over a fixed splitting.

A sum of gradients indexed by I in {1..N} is injectively elliptic when its
symbol kills no nonzero decomposable tensor.  The classification below is
combinatorial: a short list of minimal elliptic index sets, and the mirror
family of maximal non-elliptic sets built by choosing one index out of each
symmetric pair {j, N+2-j}.  The branching-rule check is an independent
necessary condition used as a diagnostic, not as the classifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional

from .decomposition import Decomposition
from .scalars import HalfInt

__all__ = [
    "EllipticityReport",
    "index_pairs",
    "unpaired_middle_index",
    "minimal_elliptic_sets",
    "ne_sets",
    "maximal_non_elliptic_sets",
    "is_elliptic",
    "branch_so_n_minus_1",
    "check_nonelliptic_necessary",
    "validate_subset",
]


@dataclass(frozen=True)
class EllipticityReport:
    elliptic: bool
    # For an elliptic set: a minimal elliptic subset of I.
    # For a non-elliptic set: a maximal non-elliptic superset of I.
    witness: frozenset[int]


def validate_subset(dec: Decomposition, indices: Iterable[int], allow_empty: bool = False) -> frozenset[int]:
    out = frozenset(int(i) for i in indices)
    if not out and not allow_empty:
        raise ValueError("operator index set must be non-empty")
    bad = [i for i in out if not 1 <= i <= dec.num_components]
    if bad:
        raise ValueError(f"indices {sorted(bad)} outside 1..{dec.num_components}")
    return out


def index_pairs(dec: Decomposition) -> tuple[tuple[int, int], ...]:
    """Symmetric pairs {j, N+2-j} for j = 2..floor((N+1)/2)."""
    n_comp = dec.num_components
    return tuple((j, n_comp + 2 - j) for j in range(2, (n_comp + 1) // 2 + 1))


def unpaired_middle_index(dec: Decomposition) -> Optional[int]:
    """The self-paired middle slot; exists only when N is even."""
    n_comp = dec.num_components
    return n_comp // 2 + 1 if n_comp % 2 == 0 else None


def minimal_elliptic_sets(dec: Decomposition) -> tuple[frozenset[int], ...]:
    """Minimal index sets with elliptic gradient sums.

    Always the top gradient {1} and the pairs {j, N+2-j} below the middle;
    the middle slot is elliptic alone for even N, while for odd N > 1 it is
    elliptic alone exactly when the weight is properly half-integral and
    otherwise only together with its pair partner.
    """
    out: list[frozenset[int]] = [frozenset({1})]
    pairs = index_pairs(dec)
    if dec.case == "2nu":
        out.append(frozenset({dec.nu + 1}))
        out.extend(frozenset(p) for p in pairs)
    elif dec.case == "2nu+1":
        if dec.properly_half_integral:
            out.append(frozenset({dec.nu + 1}))
            out.extend(frozenset(p) for p in pairs if p[0] != dec.nu + 1)
        else:
            out.extend(frozenset(p) for p in pairs)
    else:
        out.extend(frozenset(p) for p in pairs)
    return tuple(out)


def ne_sets(dec: Decomposition) -> Iterator[frozenset[int]]:
    """Index sets choosing one element of each symmetric pair, lazily.

    These are the candidate vertices of the projection-norm polytope; apart
    from the properly half-integral exception they are exactly the maximal
    non-elliptic index sets.  Yields 2^(#pairs) sets, {**empty**} when there
    are no pairs.
    """
    pairs = index_pairs(dec)
    for choice in product(*pairs) if pairs else iter([()]):
        yield frozenset(choice)


def maximal_non_elliptic_sets(dec: Decomposition) -> tuple[frozenset[int], ...]:
    """Maximal index sets with non-elliptic sums."""
    family = list(ne_sets(dec))
    if dec.case == "2nu+1" and dec.properly_half_integral:
        middle = dec.nu + 1
        family = [J for J in family if middle not in J]
    return tuple(family)


def is_elliptic(dec: Decomposition, indices: Iterable[int]) -> EllipticityReport:
    """Classify an index set, checking both containment routes agree."""
    subset = validate_subset(dec, indices)
    minimal_hits = [M for M in minimal_elliptic_sets(dec) if M <= subset]
    non_elliptic_covers = [M for M in maximal_non_elliptic_sets(dec) if subset <= M]
    if bool(minimal_hits) == bool(non_elliptic_covers):
        raise AssertionError(
            f"ellipticity routes disagree for I={sorted(subset)} on {dec.weight}"
        )
    if minimal_hits:
        return EllipticityReport(elliptic=True, witness=minimal_hits[0])
    return EllipticityReport(elliptic=False, witness=non_elliptic_covers[0])


def branch_so_n_minus_1(entries: Iterable, n: int) -> tuple[tuple[HalfInt, ...], ...]:
    """Restriction of an so(n) highest weight to so(n-1): the interlacing
    weights, each with multiplicity one.

    For odd n the restricted weights carry a signed last coordinate.  Needs
    n >= 4 so that the subalgebra is semisimple.
    """
    if n < 4:
        raise ValueError("branching requires n >= 4")
    coords = [HalfInt(e).as_fraction() for e in entries]
    m = n // 2
    if len(coords) != m:
        raise ValueError(f"expected {m} coordinates for so({n})")
    if n % 2 == 0:
        # so(2m) -> so(2m-1): mu_1 >= v_1 >= mu_2 >= ... >= v_{m-1} >= |mu_m|
        bounds = [(coords[i + 1], coords[i]) for i in range(m - 2)]
        bounds.append((abs(coords[-1]), coords[-2]))
    else:
        # so(2m+1) -> so(2m): mu_1 >= v_1 >= ... >= mu_m >= |v_m|, v_m signed
        bounds = [(coords[i + 1], coords[i]) for i in range(m - 1)]
        bounds.append((-coords[-1], coords[-1]))

    results: list[tuple[HalfInt, ...]] = []

    def extend(prefix: list, pos: int) -> None:
        if pos == len(bounds):
            results.append(tuple(HalfInt(v) for v in prefix))
            return
        lo, hi = bounds[pos]
        v = lo
        while v <= hi:  # unit steps keep the integrality class of mu
            extend(prefix + [v], pos + 1)
            v += 1

    extend([], 0)
    return tuple(results)


def check_nonelliptic_necessary(dec: Decomposition, indices: Iterable[int]) -> bool:
    """Necessary condition for ellipticity via restriction to so(n-1).

    True when every so(n-1) constituent of V occurs in some summand with
    index in I.  A True result does not certify ellipticity (the middle
    gradient of an integral odd-case weight passes yet is not elliptic);
    False certifies non-ellipticity.
    """
    subset = validate_subset(dec, indices)
    lam = dec.weight
    needed = set(branch_so_n_minus_1(lam.entries, lam.n))
    available: set[tuple[HalfInt, ...]] = set()
    for comp in dec.components:
        if comp.index not in subset:
            continue
        for target in comp.targets:
            available.update(branch_so_n_minus_1(target.entries, lam.n))
    return needed <= available
