"""Truncated Hilbert series and the denominators the greedy fitter finds.

    python demos/hilbert_fits.py
"""

from fwsmod.groups import TRIVIAL, parse_group
from fwsmod.hilbert import (
    FittedRational,
    candidate_factors,
    fit_rational,
    specialize_univariate,
    truncated_series,
)
from fwsmod.modules import coinvariants, parse_module, v0_bar

Z2 = parse_group("Z2")


def show(title, M, N, group, degree=1):
    S = truncated_series(M, N)
    print("==", title, "==")
    print("univariate coefficients:", [str(x) for x in S.graded()])
    F = fit_rational(S, candidate_factors(group, degree=degree))
    if isinstance(F, FittedRational):
        print("fit:", F.describe())
        print("re-expansion exact:", F.expand() == S)
        print("with all t_a = t:", specialize_univariate(F).describe())
    else:
        print("no fit:", F.reason)
    print()


show("P_[2] over FS", parse_module("ppx[fs]:0,0", TRIVIAL), 12, TRIVIAL, degree=2)
show("V0-bar over Z/2", v0_bar(Z2), 10, Z2)
show("coinvariants of V0-bar over Z/2", coinvariants(v0_bar(Z2)), 10, Z2)
show("V0-bar over the trivial group", v0_bar(TRIVIAL), 10, TRIVIAL)
# Over Z/3 the numerator reaches degree 8, so the truncation must leave room
# for the guard band beyond it.
show("V0-bar over Z/3", v0_bar(parse_group("Z3")), 11, parse_group("Z3"))
