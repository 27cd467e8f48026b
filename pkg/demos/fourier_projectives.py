"""Split a principal projective over zero-labeled sets into isotypic parts.

The point A^X acts on P_X(Y) by changing pointings; each character
l: Y -> A^vee cuts out a piece, and the pieces of P_X are sums of FWS
projectives over the dual group.

    python demos/fourier_projectives.py
"""

import itertools

from fwsmod.category import LabeledSet, zero_labeled
from fwsmod.groups import parse_group
from fwsmod.modules import fourier, principal_projective

for name, k in (("Z2", 2), ("Z3", 1)):
    G = parse_group(name)
    M = principal_projective(zero_labeled(G, k), "fsA")
    F = fourier(M)
    print("== A = %s, |X| = %d ==" % (name, k))
    for n in range(1, 4):
        parts = F.decompose(n)
        print("|Y| = %d: dim M(Y) = %d, isotypic dims %s" % (
            n, M.dim(zero_labeled(G, n)),
            {",".join(G.format_element(a) for a in l): d for l, d in sorted(parts.items())}))
    # compare with the FWS projectives on the dual side
    for n in range(1, 4):
        Y = LabeledSet(G, (G.zero,) * n)
        direct = sum(principal_projective(LabeledSet(G, l), "fws").dim(Y)
                     for l in itertools.product(G.elements, repeat=k))
        print("  at the all-trivial character, |Y| = %d: %d vs sum of projectives %d"
              % (n, F.dim(Y), direct))
    print()
