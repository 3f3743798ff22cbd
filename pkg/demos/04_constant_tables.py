#!/usr/bin/env python3
"""Complete constant tables in dimensions 3 and 4.

Modules are labelled by symmetric powers of the (half-)spin representations:
one parameter r in dimension 3, a pair r >= s >= 0 in dimension 4.  Each row
is computed by the engine and checked against the published closed formula.
"""

from katoweights.scalars import format_rational
from katoweights.tables import dim3_table, dim4_table

print("dimension 3 (weight r/2):")
print(f"  {'operator':<18} {'r':>2}  {'k^2':>8}  {'k':>13}")
for row in dim3_table(6):
    assert row.k_squared == row.formula_k_squared
    print(f"  {row.operator:<18} {row.r:>2}  {format_rational(row.k_squared):>8}  {row.k_string:>13}")

print("\ndimension 4 (weight ((r+s)/2, (r-s)/2)), r <= 4:")
print(f"  {'operator':<12} {'r':>2} {'s':>2}  {'k^2':>8}  {'k':>13}")
for row in dim4_table(4):
    assert row.k_squared == row.formula_k_squared
    print(f"  {row.operator:<12} {row.r:>2} {row.s:>2}  {format_rational(row.k_squared):>8}  {row.k_string:>13}")

# the co-closed positive-chirality curvature cell
gl = [r for r in dim4_table(4) if r.operator == "spin-field" and (r.r, r.s) == (4, 0)]
print(f"\nco-closed positive curvature half: k = {gl[0].k_string}")
