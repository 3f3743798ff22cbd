from fractions import Fraction

import pytest

from katoweights.tables import dim3_table, dim3_weight, dim4_table, dim4_weight


def test_dim3_structure():
    rows = dim3_table(8)
    by_key = {(r.operator, r.r): r for r in rows}
    assert by_key[("twistor", 1)].k_squared == Fraction(1, 3)
    assert by_key[("dirac", 1)].k_squared == Fraction(2, 3)
    assert by_key[("dirac-type", 2)].k_squared == Fraction(2, 3)
    assert by_key[("rarita-schwinger", 3)].k_squared == Fraction(14, 15)
    assert by_key[("rarita-schwinger", 5)].k_squared == Fraction(34, 35)
    assert ("dirac", 2) not in by_key
    assert ("rarita-schwinger", 4) not in by_key
    for row in rows:
        assert row.k_squared == row.formula_k_squared


def test_dim3_split_sizes():
    assert dim3_weight(1).num_components == 2
    assert dim3_weight(0).num_components == 1
    assert dim3_weight(4).num_components == 3


def test_dim4_structure():
    rows = dim4_table(8)
    by_key = {(r.operator, r.r, r.s): r for r in rows}
    # co-closed positive half curvature-type tensor
    assert by_key[("spin-field", 4, 0)].k_squared == Fraction(3, 5)
    assert by_key[("twistor", 0, 0)].k_squared == 0
    assert by_key[("twistor", 2, 2)].k_squared == Fraction(2, 3)
    assert by_key[("dirac-type", 3, 3)].k_squared == Fraction(5, 8)
    assert by_key[("dirac-type", 3, 1)].k_squared == Fraction(3, 4)
    assert ("dirac-type", 3, 0) not in by_key
    assert ("spin-field", 2, 2) not in by_key
    for row in rows:
        assert row.k_squared == row.formula_k_squared


def test_dim4_split_sizes():
    assert dim4_weight(0, 0).num_components == 1
    assert dim4_weight(3, 0).num_components == 2
    assert dim4_weight(2, 2).num_components == 3
    assert dim4_weight(3, 1).num_components == 4
    with pytest.raises(ValueError):
        dim4_weight(1, 2)
