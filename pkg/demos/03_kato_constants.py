#!/usr/bin/env python3
"""Refined Kato constants, exactly.

For a section in the kernel of an elliptic gradient sum P_I the pointwise
bound |d|xi|| <= k_I |grad xi| holds with k_I < 1; k_I^2 is a rational
function of the conformal weights, computed here exactly together with the
algebraic equality case.
"""

from fractions import Fraction

from katoweights import decompose, validate
from katoweights.kato import (
    closed_form,
    half_integral_sharp_constants,
    kato_constant,
    plus_minus_constants,
)
from katoweights.scalars import format_rational, sqrt_string


def report(n, entries, subset):
    dec = decompose(validate(n, entries))
    res = kato_constant(dec, subset)
    cf = closed_form(dec, subset)
    print(f"{dec.weight}, I = {sorted(subset)}")
    print(f"  elliptic: {res.elliptic}   k^2 = {format_rational(res.k_squared)}"
          f"   k = {sqrt_string(res.k_squared)} = {res.k:.10f}   sharp: {res.sharp}")
    print(f"  equality: derivative in {sorted(res.equality.gradient_set)} with "
          f"{sorted(res.equality.vanishing_set)} vanishing")
    if cf is not None:
        print(f"  closed form agrees: {format_rational(cf)}")


# 1-forms: conformal vector fields (1/2), harmonic 1-forms ((n-1)/n)
report(4, [1, 0], {1})
report(4, [1, 0], {2, 3})

# co-closed positive-chirality curvature half in dimension 4: sqrt(3/5)
report(4, [2, 2], {2})

# a 4-summand example
report(4, [3, 1], {3})

# kernels of the positive / negative conformal-weight halves
pm = plus_minus_constants(decompose(validate(4, [1, 0])))
print(f"\nsign-split constants for so(4) 1-forms: "
      f"k+^2 = {pm.k2_plus}, k-^2 = {pm.k2_minus}")

# properly half-integral N = 3: the generic path is not sharp for the middle
# gradient, the dedicated evaluation is
dec = decompose(validate(3, [Fraction(3, 2)]))
res = kato_constant(dec, {2})
trio = half_integral_sharp_constants(dec)
print(f"\n{dec.weight}: generic path gives k^2 = {res.k_squared} (sharp: {res.sharp});"
      f" sharpened middle constant {trio.k2_middle}")
