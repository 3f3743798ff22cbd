#!/usr/bin/env python3
"""Which sums of gradients are injectively elliptic?

The classification is combinatorial: a short list of minimal elliptic index
sets and, dually, the maximal non-elliptic sets built by choosing one index
out of each symmetric pair {j, N+2-j}.
"""

from katoweights import decompose, validate
from katoweights.ellipticity import (
    check_nonelliptic_necessary,
    is_elliptic,
    maximal_non_elliptic_sets,
    minimal_elliptic_sets,
    ne_sets,
)


def show(n, entries):
    dec = decompose(validate(n, entries))
    print(f"{dec.weight}  (N = {dec.num_components})")
    print("  minimal elliptic:    ", [sorted(s) for s in minimal_elliptic_sets(dec)])
    print("  choice family:       ", [sorted(s) for s in ne_sets(dec)])
    print("  maximal non-elliptic:", [sorted(s) for s in maximal_non_elliptic_sets(dec)])
    return dec


dec = show(4, [1, 0])
for subset in ({1}, {2}, {2, 3}, {1, 3}):
    rep = is_elliptic(dec, subset)
    print(f"  I = {sorted(subset)}: {'elliptic' if rep.elliptic else 'non-elliptic'}"
          f" (witness {sorted(rep.witness)})")

print()
show(4, [3, 1])

# For a properly half-integral weight with N = 2nu+1 the middle gradient is
# elliptic on its own, which shrinks the maximal non-elliptic family.
print()
show(3, ["3/2"])

# A necessary condition via restriction to so(n-1): every constituent of V
# must appear in one of the chosen summands.  It is not sufficient: the
# middle gradient of an integral weight passes yet is not elliptic.
print()
dec = decompose(validate(5, [1, 1]))
middle = dec.nu + 1
print(f"{dec.weight}: middle gradient index {middle}")
print("  passes branching condition:", check_nonelliptic_necessary(dec, {middle}))
print("  actually elliptic:         ", is_elliptic(dec, {middle}).elliptic)
