"""Walk through the module V0-bar: its dimensions, its generators, and the
factorization of the eta map through the quotient from V0-tilde.

    python demos/v0_generation.py
"""

from fwsmod.category import enumerate_all_objects
from fwsmod.generation import certify_generation, factor_check_v00, generation_profile
from fwsmod.groups import parse_group
from fwsmod.modules import v0_bar, v0_tilde


def dimension_table(G, max_size):
    tilde, bar = v0_tilde(G), v0_bar(G)
    print("labels            dim V0~  dim V0-bar")
    for X in enumerate_all_objects(G, max_size):
        labels = ",".join(G.format_element(a) for a in X.labels) or "(empty)"
        print("%-18s %7d  %9d" % (labels, tilde.dim(X), bar.dim(X)))


for name in ("Z2", "Z3"):
    G = parse_group(name)
    print("== A = %s ==" % name)
    dimension_table(G, 3)

    # Generators only appear at size 1; everything larger is reached by
    # collapsing subsets of size >= 2.
    prof = generation_profile(v0_bar(G), 4)
    print("new generators by size:", prof.counts_by_size())
    print(certify_generation(v0_bar(G), 1, 5).summary())
    print(certify_generation(v0_bar(G), 0, 5).summary())

    # V0-tilde needs generators at size 3, where it first becomes nonzero.
    print("V0~ generation degree up to 4:", generation_profile(v0_tilde(G), 4).max_degree)

    rep = factor_check_v00(G, 3)
    kernels = [r.kernel_dim for r in rep.records if r.kernel_dim]
    print("eta kills ker(q (x) id):", rep.passed, "kernel dims seen:", kernels)
    print()
