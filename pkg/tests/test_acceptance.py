"""Acceptance battery: each test prints one pass/fail line (run with -s).

Exact checks use rational equality; the numerical oracle criterion carries
the stated floating tolerances and time budget.
"""

import contextlib
import itertools
import time
from fractions import Fraction

from katoweights import decompose, suites
from katoweights.kato import closed_form, half_integral_sharp_constants, kato_constant
from katoweights.oracle import (
    build_b_operator,
    build_rep,
    bzero_defect,
    check_ctilde_symmetry,
    numeric_sup,
)
from katoweights.tables import dim3_table, dim4_table
from katoweights.weights import validate


@contextlib.contextmanager
def criterion(num: int, description: str):
    start = time.perf_counter()
    try:
        yield
    except Exception:
        print(f"\n[FAIL] criterion {num}: {description}", flush=True)
        raise
    elapsed = time.perf_counter() - start
    print(f"\n[PASS] criterion {num}: {description} ({elapsed:.2f}s)", flush=True)


def dec_of(n, entries):
    return decompose(validate(n, entries))


def triple(dec):
    return (
        kato_constant(dec, {1}).k_squared,
        kato_constant(dec, {2, 3}).k_squared,
        kato_constant(dec, {1, 2}).k_squared,
    )


def test_criterion_1_closed_form_triples():
    with criterion(1, "printed constant triples for the four classical modules, n = 3..12"):
        start = time.perf_counter()
        for n in range(3, 13):
            m = n // 2
            # vectors / 1-forms
            lam = [1] + [0] * (m - 1)
            assert triple(dec_of(n, lam)) == (
                Fraction(1, 2),
                Fraction(n - 1, n),
                Fraction(1, n),
            )
            # 2-forms (irreducible only for n >= 5)
            if n >= 5:
                lam = [1, 1] + [0] * (m - 2)
                assert triple(dec_of(n, lam)) == (
                    Fraction(1, 3),
                    Fraction(n - 2, n - 1),
                    Fraction(1, n - 1),
                )
            # trace-free symmetric 2-tensors
            lam = [2] + [0] * (m - 1)
            assert triple(dec_of(n, lam)) == (
                Fraction(2, 3),
                Fraction(n, n + 2),
                Fraction(2, n + 2),
            )
            # algebraic curvature-type tensors (Cartan square of the 2-forms)
            if n >= 5:
                lam = [2, 2] + [0] * (m - 2)
                assert triple(dec_of(n, lam)) == (
                    Fraction(1, 2),
                    Fraction(n - 1, n + 1),
                    Fraction(2, n + 1),
                )
        assert time.perf_counter() - start < 1.0


def test_criterion_2_introductory_estimates():
    with criterion(2, "classical refined estimates recovered as special cases"):
        for n in range(3, 13):
            m = n // 2
            dec = dec_of(n, [2] + [0] * (m - 1))
            assert kato_constant(dec, {2, 3}).k_squared == Fraction(n, n + 2)
        for n in range(5, 13):
            m = n // 2
            dec = dec_of(n, [2, 2] + [0] * (m - 2))
            assert kato_constant(dec, {2, 3}).k_squared == Fraction(n - 1, n + 1)
        # n = 4: the curvature module splits into chirality halves with N = 2
        assert kato_constant(dec_of(4, [2, 2]), {2}).k_squared == Fraction(3, 5)
        # harmonic 2-forms in dimension 4 (chirality half, N = 2)
        assert kato_constant(dec_of(4, [1, 1]), {2}).k_squared == Fraction(2, 3)


def test_criterion_3_dimension_tables():
    with criterion(3, "dimension-3 and dimension-4 tables, r, s <= 8"):
        start = time.perf_counter()
        rows3 = dim3_table(8)
        assert len(rows3) == 8 + 1 + 7 + 3  # twistor, dirac, dirac-type, r-s rows
        for row in rows3:
            assert row.k_squared == row.formula_k_squared
        rows4 = dim4_table(8)
        for row in rows4:
            assert row.k_squared == row.formula_k_squared
        gl = [r for r in rows4 if r.operator == "spin-field" and (r.r, r.s) == (4, 0)]
        assert gl[0].k_squared == Fraction(3, 5)
        assert time.perf_counter() - start < 5.0


def test_criterion_4_dual_forms():
    with criterion(4, "max-form equals one-minus-min-form for every index set (n <= 9, entries <= 3)"):
        result = suites.suite_dual(9, Fraction(3))
        assert result.checks > 400
        assert result.failures == []


def test_criterion_5_closed_form_cross_check():
    with criterion(5, "per-case closed formulas match the vertex scan on every matched pattern"):
        result = suites.suite_closedform(9, Fraction(3))
        assert result.checks > 400
        assert result.failures == []


def test_criterion_6_identity_suites():
    with criterion(6, "trace and dimension identities, n <= 11, entries <= 7/2"):
        result = suites.suite_identities(11, Fraction(7, 2))
        assert result.checks > 2000
        assert result.failures == []


def test_criterion_7_vertex_geometry():
    with criterion(7, "vertex feasibility and elimination of elliptic choice sets"):
        result = suites.suite_vertex(9, Fraction(3))
        assert result.checks > 400
        assert result.failures == []


def test_criterion_8_ellipticity_consistency():
    with criterion(8, "classification routes, sign-split sets, branching necessary condition"):
        result = suites.suite_ellipticity(9, Fraction(3))
        assert result.checks > 400
        assert result.failures == []


ORACLE_MODELS = (
    [(n, "standard") for n in range(4, 8)]
    + [(n, "lambda^2") for n in range(4, 8)]
    + [(n, "lambda^3") for n in (6, 7)]
    + [(n, "sym2") for n in range(4, 7)]
)


def test_criterion_9_oracle_agreement():
    with criterion(9, "matrix oracle agrees with the symbolic layer on 13 tensor modules"):
        start = time.perf_counter()
        for n, kind in ORACLE_MODELS:
            bm = build_b_operator(build_rep(n, kind))  # checks multiplicities
            assert bm.eigen_defect < 1e-9, (n, kind)
            assert bzero_defect(bm, trials=100, seed=0) < 1e-10, (n, kind)
            report = check_ctilde_symmetry(bm, j_max=4)
            assert report.max_block_defect < 1e-10, (n, kind)
            assert report.max_form_defect < 1e-10, (n, kind)
            n_comp = bm.dec.num_components
            full = frozenset(range(1, n_comp + 1))
            for size in range(1, n_comp + 1):
                for combo in itertools.combinations(sorted(full), size):
                    subset = frozenset(combo)
                    res = kato_constant(bm.dec, subset)
                    sup = numeric_sup(bm, full - subset, seed=0, restarts=32)
                    if res.elliptic:
                        assert abs(sup.value**2 - float(res.k_squared)) < 1e-6, (
                            n,
                            kind,
                            sorted(subset),
                        )
                    else:
                        assert abs(sup.value - 1.0) < 1e-6, (n, kind, sorted(subset))
        assert time.perf_counter() - start < 120.0


def test_criterion_10_degenerate_handling():
    with criterion(10, "degenerate sizes and the sharpened half-integral constants"):
        # N = 1: full covariant derivative
        assert kato_constant(dec_of(3, [0]), {1}).k_squared == 0
        assert kato_constant(dec_of(8, [0, 0, 0, 0]), {1}).k_squared == 0
        # N = 2 in all three families
        for n, entries in [(6, [1, 1, 1]), (5, ["1/2", "1/2"]), (4, [2, 2])]:
            dec = dec_of(n, entries)
            w = dec.conformal_weights()
            assert kato_constant(dec, {1}).k_squared == w[0] / (w[0] - w[1])
            assert kato_constant(dec, {2}).k_squared == -w[1] / (w[0] - w[1])
            assert closed_form(dec, {1}) == w[0] / (w[0] - w[1])
            assert closed_form(dec, {2}) == -w[1] / (w[0] - w[1])
        # properly half-integral N = 3: main path flags non-sharp
        for r in (3, 5, 7):
            dec = dec_of(3, [Fraction(r, 2)])
            for subset in ({2}, {2, 3}, {1, 2}):
                res = kato_constant(dec, subset)
                assert not res.sharp
            for subset in ({1}, {1, 3}):
                assert kato_constant(dec, subset).sharp
            trio = half_integral_sharp_constants(dec)
            assert trio.k2_middle == 1 - Fraction(1, r * (r + 2))
            assert trio.k2_middle_bottom <= kato_constant(dec, {2, 3}).k_squared
            assert trio.k2_top_middle <= kato_constant(dec, {1, 2}).k_squared
