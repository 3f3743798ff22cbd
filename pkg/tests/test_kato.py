import itertools
from fractions import Fraction

import pytest

from katoweights import decompose
from katoweights.kato import (
    closed_form,
    coordinate_bounds,
    half_integral_sharp_constants,
    kato_constant,
    norms_at,
    plus_minus_constants,
    vertex_point,
    vertex_points,
)
from katoweights.suites import weight_grid
from katoweights.weights import validate


def dec_of(n, entries):
    return decompose(validate(n, entries))


def test_vertex_values_standard_dim4():
    dec = dec_of(4, [1, 0])
    vp = vertex_point(dec, {3})
    assert vp.norms == {1: Fraction(1, 2), 2: Fraction(1, 2), 3: Fraction(0)}
    vp = vertex_point(dec, {2})
    assert vp.norms == {1: Fraction(3, 4), 2: Fraction(0), 3: Fraction(1, 4)}
    with pytest.raises(ValueError):
        vertex_point(dec, {1})
    with pytest.raises(ValueError):
        vertex_point(dec, {2, 3})


def test_vertex_norm_sums_on_grid():
    for lam in weight_grid(8, Fraction(2)):
        dec = decompose(lam)
        pair_count = len(vertex_points(dec)[0].vanishing)
        for vp in vertex_points(dec):
            assert sum(vp.norms.values()) == 1
            assert len(vp.coords) == pair_count


def test_top_gradient_constants():
    # conformal/Killing constant 1/2 for the standard module in any dimension
    for n in range(3, 9):
        entries = [1] + [0] * (n // 2 - 1)
        res = kato_constant(dec_of(n, entries), {1})
        assert res.k_squared == Fraction(1, 2)
        assert res.sharp and res.elliptic


def test_known_constants():
    assert kato_constant(dec_of(4, [2, 2]), {2}).k_squared == Fraction(3, 5)
    assert kato_constant(dec_of(4, [1, 1]), {2}).k_squared == Fraction(2, 3)
    res = kato_constant(dec_of(4, [3, 1]), {3})
    assert res.k_squared == Fraction(14, 15)
    # non-elliptic sums sit at 1
    assert kato_constant(dec_of(4, [1, 0]), {2}).k_squared == 1
    assert kato_constant(dec_of(4, [3, 1]), {2}).k_squared == 1


def test_equality_case_of_top_gradient():
    res = kato_constant(dec_of(4, [1, 0]), {1})
    assert res.extremal_set == frozenset({3})
    assert res.equality.gradient_set == frozenset({2})
    assert res.equality.vanishing_set == frozenset({3})


def test_degenerate_sizes():
    # single summand: full covariant derivative, constant 0
    res = kato_constant(dec_of(3, [0]), {1})
    assert res.k_squared == 0 and res.sharp
    # two summands: both elementary operators elliptic
    dec = dec_of(6, [1, 1, 1])
    w = dec.conformal_weights()
    assert kato_constant(dec, {1}).k_squared == w[0] / (w[0] - w[1])
    assert kato_constant(dec, {2}).k_squared == -w[1] / (w[0] - w[1])
    assert kato_constant(dec, {1, 2}).k_squared == 0


def test_half_integral_trio():
    dec = dec_of(3, ["3/2"])
    res = kato_constant(dec, {2})
    assert res.k_squared == 1 and not res.sharp and res.elliptic
    trio = half_integral_sharp_constants(dec)
    assert trio.k2_middle == Fraction(14, 15)
    assert closed_form(dec, {2}) == Fraction(14, 15)
    assert trio.k2_middle_bottom < kato_constant(dec, {2, 3}).k_squared
    assert trio.k2_top_middle < kato_constant(dec, {1, 2}).k_squared
    assert half_integral_sharp_constants(dec_of(3, ["5/2"])).k2_middle == Fraction(34, 35)
    with pytest.raises(ValueError):
        half_integral_sharp_constants(dec_of(5, ["1/2", "1/2"]))
    with pytest.raises(ValueError):
        half_integral_sharp_constants(dec_of(3, [2]))


def test_closed_form_patterns():
    dec = dec_of(6, [1, 1, 1])
    w = dec.conformal_weights()
    assert closed_form(dec, {1}) == w[0] / (w[0] - w[1])
    d3 = dec_of(5, [2, 2])
    w = d3.conformal_weights()
    assert closed_form(d3, {2, 3}) == -w[2] / (w[0] - w[2])
    assert closed_form(d3, {1, 2}) == w[0] / (w[0] - w[2])
    assert closed_form(d3, {1, 3}) == w[0] / (w[0] - w[1])
    d431 = dec_of(4, [3, 1])
    assert closed_form(d431, {3}) == Fraction(14, 15)
    assert closed_form(d431, {1}) == kato_constant(d431, {1}).k_squared
    assert closed_form(d431, {2, 4}) == kato_constant(d431, {2, 4}).k_squared
    # unmatched patterns return None
    assert closed_form(d431, {2}) is None
    assert closed_form(dec_of(3, [1]), {3}) is None


def test_closed_form_matches_scan_on_grid():
    for lam in weight_grid(8, Fraction(2)):
        dec = decompose(lam)
        sharpened = dec.num_components == 3 and dec.properly_half_integral
        for size in range(1, dec.num_components + 1):
            for combo in itertools.combinations(range(1, dec.num_components + 1), size):
                subset = frozenset(combo)
                cf = closed_form(dec, subset)
                if cf is None:
                    continue
                scan = kato_constant(dec, subset).k_squared
                if sharpened and subset in (
                    frozenset({2}),
                    frozenset({2, 3}),
                    frozenset({1, 2}),
                ):
                    assert cf <= scan
                else:
                    assert cf == scan


def test_monotonicity_under_shrinking():
    for lam in weight_grid(7, Fraction(2)):
        dec = decompose(lam)
        n_comp = dec.num_components
        full = frozenset(range(1, n_comp + 1))
        for size in range(1, n_comp):
            for combo in itertools.combinations(range(1, n_comp + 1), size):
                small = frozenset(combo)
                for extra in full - small:
                    bigger = small | {extra}
                    assert (
                        kato_constant(dec, bigger).k_squared
                        <= kato_constant(dec, small).k_squared
                    )


def test_plus_minus_constants():
    pm = plus_minus_constants(dec_of(4, [1, 0]))
    assert pm.k2_plus == Fraction(1, 2)
    assert pm.k2_minus == Fraction(3, 4)
    pm = plus_minus_constants(dec_of(3, [1]))
    assert pm.k2_plus == Fraction(1, 2)
    assert pm.k2_minus == Fraction(2, 3)
    with pytest.raises(ValueError):
        plus_minus_constants(dec_of(4, [3, 1]))  # a conformal weight vanishes
    with pytest.raises(ValueError):
        plus_minus_constants(dec_of(3, [0]))


def test_coordinate_bounds():
    assert coordinate_bounds(dec_of(4, [1, 0])) == (
        (Fraction(1, 4), Fraction(9, 4)),
    )
    assert coordinate_bounds(dec_of(4, [3, 1])) == (
        (Fraction(9, 4), Fraction(49, 4)),
    )
    with pytest.raises(ValueError):
        coordinate_bounds(dec_of(5, ["1/2", "1/2"]))
    # bounds bracket every feasible vertex coordinate
    dec = dec_of(6, [2, 1, 0])
    bounds = coordinate_bounds(dec)
    for vp in vertex_points(dec):
        for (lo, hi), q in zip(bounds, vp.coords):
            assert lo <= q <= hi


def test_middle_pair_ratio_and_minimum():
    # For an odd number of summands the two middle-slot evaluations of the
    # pair formula are strictly ordered, pinning the minimum at C2.
    from katoweights.decomposition import translated_weights
    from katoweights.kato import _j_zero, _vertex_term

    seen = 0
    for lam in weight_grid(9, Fraction(3)):
        dec = decompose(lam)
        n_comp = dec.num_components
        if n_comp < 3 or n_comp % 2 == 0:
            continue
        top = (n_comp + 1) // 2
        wt = (None,) + translated_weights(dec)  # 1-based
        for k in range(1, top - 1):
            lhs = (wt[top] + wt[k + 1]) * (wt[top + 1] - wt[n_comp + 1 - k])
            rhs = (wt[top + 1] + wt[k + 1]) * (wt[top] - wt[n_comp + 1 - k])
            assert lhs > rhs > 0, (lam, k)
        j0 = _j_zero(dec, top)
        c1 = _vertex_term(dec, top, j0 | {n_comp + 2 - top})
        c2 = _vertex_term(dec, n_comp + 2 - top, j0 | {top})
        assert c2 < c1, lam
        seen += 1
    assert seen > 50


def test_norms_at_elliptic_sets_go_negative():
    dec = dec_of(4, [1, 0])
    norms = norms_at(dec, {1})
    assert any(v < 0 for v in norms.values())
    assert sum(norms.values()) == 1
