"""
Where the tensor product degenerates
====================================

Scanning small rational shifts finds the values of ``alpha`` at which
``V(u) (x) V(u + alpha)`` stops being irreducible. Two oracles look at each
point: a pairing rank on the cyclic span of the top vector, and the
Jacobson radical of the whole operator algebra.
"""

from syang.verify import candidate_alphas, gl11_pair_scan

points = gl11_pair_scan(candidate_alphas(4))
print(f"{len(points)} shifts scanned")
for p in points:
    if p.degenerate:
        print(
            f"alpha = {p.alpha}: top vector generates {p.cyclic_dim} dims "
            f"(irreducible quotient {p.quotient_dim}); radical of W has dim {len(p.radical)}, "
            f"head dim {p.head_dim}, simple head: {p.head_simple}"
        )

###############################################################################
# At ``alpha = -1`` the top vector still generates everything and the
# radical is the maximal submodule of that cyclic module. At ``alpha = 1``
# the top vector only reaches a two-dimensional submodule, which is itself
# the radical: the module is a non-split extension with the top weight at
# the bottom.
