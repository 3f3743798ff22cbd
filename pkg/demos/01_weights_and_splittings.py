#!/usr/bin/env python3
"""Splitting R^n (x) V into gradient targets.

Every irreducible SO(n)/Spin(n) module V is labelled by a dominant weight;
tensoring with R^n splits into N irreducible pieces, each carrying a
conformal weight.  All arithmetic below is exact.
"""

import json

from katoweights import decompose, to_json_dict, validate, virtual_weights

# The 1-form module of so(4): weight (1, 0).  The two middle targets share
# a conformal weight and are kept together as one summand.
lam = validate(4, [1, 0])
dec = decompose(lam)
print(lam)
print(f"N = {dec.num_components} summands, case {dec.case}")
for comp in dec.components:
    targets = " + ".join(t.label() for t in comp.targets)
    print(f"  j={comp.index}: {targets:<24} w = {comp.w}   w~ = {comp.translated_weight}   dim = {comp.dim}")

# Candidate targets before dominance filtering: lambda +- e_i and, in odd
# dimensions, lambda itself.
print("\nvirtual targets of so(5) weight (1/2, 1/2):")
for v in virtual_weights(validate(5, ["1/2", "1/2"])):
    flag = "effective" if v.effective else "not dominant / not occurring"
    print(f"  {v.label():<14} w = {str(v.w):>5}   {flag}")

# Spinor-type weights have half-odd-integer coordinates throughout.
spin = validate(3, ["3/2"])
print(f"\n{spin} splits with conformal weights {decompose(spin).conformal_weights()}")

# Machine-readable form of a splitting.
print("\nJSON rendering:")
print(json.dumps(to_json_dict(dec), indent=2))
