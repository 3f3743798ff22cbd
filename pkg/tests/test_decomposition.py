from fractions import Fraction

import pytest

from katoweights import casimir, decompose, translated_weights, virtual_weights
from katoweights.decomposition import to_json_dict
from katoweights.suites import weight_grid
from katoweights.weights import validate


def frac(x) -> Fraction:
    return Fraction(x)


def test_standard_dim4_merged_case():
    dec = decompose(validate(4, [1, 0]))
    assert dec.num_components == 3
    assert dec.case == "2nu-1"
    assert dec.conformal_weights() == (frac(1), frac(-1), frac(-3))
    middle = dec.components[1]
    assert middle.merged
    assert [str(e) for e in middle.targets[0].entries] == ["1", "1"]
    assert [str(e) for e in middle.targets[1].entries] == ["1", "-1"]
    assert [c.dim for c in dec.components] == [9, 6, 1]


def test_virtual_weights_even_dim4():
    virtuals = virtual_weights(validate(4, [1, 0]))
    effective = [(v.kind, v.index, str(v.w)) for v in virtuals if v.effective]
    assert effective == [
        ("plus", 1, "1"),
        ("plus", 2, "-1"),
        ("minus", 2, "-1"),
        ("minus", 1, "-3"),
    ]
    zero = [v for v in virtuals if v.kind == "zero"][0]
    assert not zero.effective  # even dimension


def test_virtual_weights_spinor_dim5():
    virtuals = virtual_weights(validate(5, ["1/2", "1/2"]))
    by_kind = {(v.kind, v.index): v for v in virtuals}
    assert by_kind[("plus", 1)].effective and by_kind[("plus", 1)].w == Fraction(1, 2)
    assert by_kind[("zero", None)].effective and by_kind[("zero", None)].w == -2
    assert not by_kind[("minus", 2)].effective  # last coordinate only 1/2
    assert not by_kind[("plus", 2)].effective
    assert not by_kind[("minus", 1)].effective


def test_trivial_weight_single_component():
    dec = decompose(validate(3, [0]))
    assert dec.num_components == 1
    assert dec.conformal_weights() == (frac(0),)
    assert dec.components[0].dim == 3


@pytest.mark.parametrize(
    "n, entries, expected_w, expected_case",
    [
        (5, [2, 2], ("2", "-2", "-4"), "2nu+1"),
        (4, [3, 1], ("3", "0", "-2", "-5"), "2nu"),
        (5, ["1/2", "1/2"], ("1/2", "-2"), "2nu"),
        (6, [1, 1, 1], ("1", "-3"), "2nu"),
        (3, ["3/2"], ("3/2", "-1", "-5/2"), "2nu+1"),
        (7, [2, 2, 1], ("2", "-1", "-3", "-4", "-6"), "2nu+1"),
        (6, [2, 1, 0], ("2", "0", "-2", "-4", "-6"), "2nu-1"),
    ],
)
def test_decompose_cases(n, entries, expected_w, expected_case):
    dec = decompose(validate(n, entries))
    assert tuple(str(w) for w in dec.conformal_weights()) == expected_w
    assert dec.case == expected_case


def test_translated_weights_examples():
    assert translated_weights(decompose(validate(4, [1, 0]))) == (
        Fraction(5, 2),
        Fraction(1, 2),
        Fraction(-3, 2),
    )
    assert translated_weights(decompose(validate(3, [0]))) == (Fraction(1),)
    assert translated_weights(decompose(validate(5, ["1/2", "1/2"]))) == (
        Fraction(5, 2),
        Fraction(0),
    )


def test_dimension_sum_over_grid():
    for lam in weight_grid(10, Fraction(4)):
        dec = decompose(lam)
        dim_v = casimir.weyl_dimension(lam.entries, lam.n)
        assert sum(c.dim for c in dec.components) == lam.n * dim_v
        wt = translated_weights(dec)
        assert all(a > b for a, b in zip(wt, wt[1:]))


def test_structure_suite():
    from katoweights.suites import suite_decomposition

    result = suite_decomposition(10, Fraction(4))
    assert result.checks > 1000
    assert result.failures == []


def test_json_shape():
    payload = to_json_dict(decompose(validate(4, [1, 0])))
    assert payload["n"] == 4
    assert payload["lambda"] == ["1", "0"]
    assert payload["N"] == 3
    assert payload["case"] == "2nu-1"
    assert payload["chirality"] == 1
    assert [c["j"] for c in payload["components"]] == [1, 2, 3]
    assert payload["components"][1]["w"] == "-1"
    assert payload["components"][1]["w_tilde"] == "1/2"
    assert len(payload["components"][1]["targets"]) == 2
