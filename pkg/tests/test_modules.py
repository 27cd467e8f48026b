import itertools

import pytest
from hypothesis import given, settings

from fwsmod.category import (
    FwsMorphism,
    LabeledSet,
    TwsMorphism,
    compose_tws,
    enumerate_all_objects,
    hom_fws,
    hom_tws,
    identity,
    zero_labeled,
)
from fwsmod.groups import TRIVIAL, parse_group, parse_labels, subgroup_and_quotient
from fwsmod.linalg import ExactMatrix
from fwsmod.modules import (
    CategoryMismatch,
    ModuleSpecError,
    act_matrix,
    coinvariants,
    convolve,
    eval_module,
    parse_module,
    plain_set,
    principal_projective,
    pushforward_u,
    restrict_to_fws,
    shift,
    v0_bar,
    v0_quotient_matrix,
    v0_tilde,
    zero_module,
)
from strategies import random_chain, rng_from, seeds, sizes_strategy

Z2 = parse_group("Z2")
Z3 = parse_group("Z3")


def L(group, text):
    return LabeledSet(group, parse_labels(group, text))


def check_functorial(M, m1, m2):
    """act(m2 o m1) = act(m1) act(m2) for m1: X -> Y, m2: Y -> Z."""
    composite = compose_tws(m2, m1)
    assert M.act(composite) == M.act(m1) @ M.act(m2)


def check_identity(M, X):
    assert M.act(identity(X)) == ExactMatrix.identity(M.dim(X))


def exhaustive_functoriality(M, max_size, pointed=True):
    objs = [X for X in enumerate_all_objects(M.group, max_size) if M.dim(X)]
    homs = {}
    for X in objs:
        for Y in objs:
            homs[X, Y] = hom_tws(X, Y) if pointed else hom_fws(X, Y)
    count = 0
    for X, Y, Z in itertools.product(objs, repeat=3):
        for m1 in homs[X, Y]:
            for m2 in homs[Y, Z]:
                check_functorial(M, m1, m2)
                count += 1
    for X in objs:
        check_identity(M, X)
    return count


# -- principal projectives ----------------------------------------------------


def test_projective_dims():
    P1 = principal_projective(plain_set(1), "fs")
    assert [P1.dim(plain_set(n)) for n in range(6)] == [0, 1, 1, 1, 1, 1]
    P2 = principal_projective(plain_set(2), "fs")
    assert P2.dim(plain_set(3)) == 6
    # position 0 is the base point: three ordinary points labelled 1, 1, 0
    P = principal_projective(L(Z2, "0"), "tws")
    assert P.dim(L(Z2, "0,1,1,0")) == 16


def test_projective_functoriality_exhaustive():
    for G in (Z2, Z3):
        P = principal_projective(L(G, "0,0"))
        assert exhaustive_functoriality(P, 3) > 0


def test_projective_fs_requires_trivial_group():
    with pytest.raises(CategoryMismatch):
        principal_projective(L(Z2, "0"), "fs")


# -- V0 ---------------------------------------------------------------------------


def test_v0_dims():
    assert v0_tilde(Z2).dim(L(Z2, "0,0,0")) == 4
    assert v0_tilde(Z2).dim(L(Z2, "1,1,1")) == 0
    for G in (Z2, Z3):
        for X in enumerate_all_objects(G, 2):
            assert v0_tilde(G).dim(X) == 0
    assert v0_bar(Z2).dim(L(Z2, "1,1,0")) == 1
    assert v0_bar(Z2).dim(L(Z2, "0,0,0")) == 4
    for n in range(1, 6):
        assert v0_bar(TRIVIAL).dim(zero_labeled(TRIVIAL, n)) == 1


def test_v0_dim_formulas():
    for G in (Z2, Z3, parse_group("Z4"), parse_group("Z2xZ2")):
        for X in enumerate_all_objects(G, 4):
            zero_sum = X.total == G.zero
            tilde = G.order ** (X.size - 1) if zero_sum and X.size >= 3 else 0
            H, Q = subgroup_and_quotient(G, X.labels)
            bar = Q.size ** (X.size - 1) if zero_sum and X.size >= 1 else 0
            assert v0_tilde(G).dim(X) == tilde
            assert v0_bar(G).dim(X) == bar


@pytest.mark.parametrize("G", [Z2, Z3])
def test_v0_functoriality_exhaustive(G):
    assert exhaustive_functoriality(v0_bar(G), 3) > 0
    assert exhaustive_functoriality(v0_tilde(G), 3) > 0


@pytest.mark.parametrize("G, max_size", [(Z2, 4), (Z3, 4), (parse_group("Z4"), 3)])
def test_quotient_map_is_natural(G, max_size):
    tilde, bar = v0_tilde(G), v0_bar(G)
    objs = enumerate_all_objects(G, max_size)
    for X in objs:
        for Y in objs:
            if not tilde.dim(Y) and not bar.dim(Y):
                continue
            for m in hom_tws(X, Y):
                left = v0_quotient_matrix(tilde, bar, X) @ tilde.act(m)
                right = bar.act(m) @ v0_quotient_matrix(tilde, bar, Y)
                assert left == right


def test_v0_bar_transition_data_bookkeeping():
    """Pull back an orbit along (f, g) by hand: alpha(f(x)) + g(x) reduced mod H."""
    G = Z3
    bar = v0_bar(G)
    X, Y = L(G, "0,1,2,0"), L(G, "0,0")
    for m in hom_tws(X, Y)[:200]:
        A = bar.act(m)
        _, Q = subgroup_and_quotient(G, X.labels)
        for j, alpha in enumerate(bar.basis(Y)):
            vals = [G.add(alpha[m.map[x]], m.pointing[x]) for x in range(X.size)]
            rep = tuple(Q.reduce(G.sub(v, vals[0])) for v in vals)
            assert A.columns[j] == {bar.index(X)[rep]: 1}


# -- shift ------------------------------------------------------------------------


def test_shift_examples():
    S = shift(v0_tilde(Z2), (1,))
    assert S.dim(L(Z2, "1,0")) == v0_tilde(Z2).dim(L(Z2, "1,1,0")) == 4
    assert shift(zero_module(Z2), (1,)).dim(L(Z2, "1,0")) == 0
    for X in enumerate_all_objects(Z2, 3):
        check_identity(S, X)


def test_shift_functoriality_exhaustive():
    for a in Z2.elements:
        assert exhaustive_functoriality(shift(v0_bar(Z2), a), 3) > 0


def test_shift_rejects_foreign_element():
    with pytest.raises(ValueError):
        shift(v0_bar(Z2), (2,))


# -- convolution ----------------------------------------------------------------


def test_convolution_of_projectives_matches_disjoint_union():
    for x in Z2.elements:
        for y in Z2.elements:
            X, Y = LabeledSet(Z2, (x,)), LabeledSet(Z2, (y, y))
            C = convolve(principal_projective(X), principal_projective(Y))
            P = principal_projective(LabeledSet(Z2, X.labels + Y.labels))
            for Z in enumerate_all_objects(Z2, 4):
                assert C.dim(Z) == P.dim(Z)


def test_convolution_dim_formula_and_symmetry():
    M, N = v0_bar(Z3), shift(v0_tilde(Z3), (1,))
    C, D = convolve(M, N), convolve(N, M)
    for X in enumerate_all_objects(Z3, 4):
        expected = 0
        for mask in range(1 << X.size):
            S = [i for i in range(X.size) if mask >> i & 1]
            T = [i for i in range(X.size) if not mask >> i & 1]
            expected += M.dim(X.restrict(S)) * N.dim(X.restrict(T))
        assert C.dim(X) == expected == D.dim(X)
    Zm = convolve(M, zero_module(Z3))
    assert all(Zm.dim(X) == 0 for X in enumerate_all_objects(Z3, 3))


def test_convolution_functoriality_exhaustive():
    C = convolve(v0_bar(Z2), principal_projective(L(Z2, "1")))
    assert exhaustive_functoriality(C, 3) > 0


# -- coinvariants -------------------------------------------------------------------


@pytest.mark.parametrize("G", [Z2, Z3])
def test_coinvariants_of_v0_bar(G):
    C = coinvariants(v0_bar(G))
    for X in enumerate_all_objects(G, 4):
        expected = 1 if X.size >= 1 and X.total == G.zero else 0
        assert C.dim(X) == expected


def test_coinvariants_trivial_group_and_zero():
    M = v0_tilde(TRIVIAL)
    C = coinvariants(M)
    for X in enumerate_all_objects(TRIVIAL, 5):
        assert C.dim(X) == M.dim(X)
    for X in enumerate_all_objects(TRIVIAL, 4):
        for Y in enumerate_all_objects(TRIVIAL, 4):
            for m in hom_fws(X, Y):
                assert C.act(m) == M.act(m)
    Z = coinvariants(zero_module(Z2))
    assert all(Z.dim(X) == 0 for X in enumerate_all_objects(Z2, 3))


def test_coinvariants_functoriality_exhaustive():
    C = coinvariants(principal_projective(L(Z2, "0,0")))
    assert exhaustive_functoriality(C, 3, pointed=False) > 0


def test_coinvariants_rejects_pointed_morphisms():
    C = coinvariants(v0_bar(Z2))
    X = L(Z2, "0,0")
    with pytest.raises(CategoryMismatch):
        C.act(TwsMorphism(identity(X, pointed=False), ((1,), (0,))))


# -- pushforward ---------------------------------------------------------------


def test_pushforward_examples():
    U = pushforward_u(coinvariants(v0_bar(Z2)))
    assert U.dim(plain_set(3)) == 4
    assert pushforward_u(zero_module(Z2, "fws")).dim(plain_set(3)) == 0


def test_pushforward_over_trivial_group_is_identity():
    M = restrict_to_fws(v0_bar(TRIVIAL))
    U = pushforward_u(M)
    for n in range(5):
        assert U.dim(plain_set(n)) == M.dim(plain_set(n))
    for m in hom_fws(plain_set(4), plain_set(2)):
        assert U.act(m) == M.act(m)


def test_pushforward_dims_are_label_sums():
    M = v0_bar(Z3)
    U = pushforward_u(M)
    for n in range(4):
        total = sum(M.dim(LabeledSet(Z3, l)) for l in itertools.product(Z3.elements, repeat=n))
        assert U.dim(plain_set(n)) == total


def test_pushforward_functoriality_and_apply():
    U = pushforward_u(v0_bar(Z2))
    assert exhaustive_functoriality(U, 4, pointed=False) > 0
    for m in hom_fws(plain_set(4), plain_set(2)):
        A = U.act(m)
        for j in range(A.cols):
            assert U.apply(m, {j: 1}) == A.columns[j]


# -- random functoriality --------------------------------------------------------


def modules_over(G):
    a = G.elements[-1]
    return [
        v0_bar(G),
        v0_tilde(G),
        shift(v0_bar(G), a),
        principal_projective(LabeledSet(G, (G.zero, a))),
        convolve(v0_bar(G), principal_projective(LabeledSet(G, (a,)))),
    ]


def test_act_respects_composition_500_pairs_z3():
    rng = rng_from(500)
    mods = modules_over(Z3)
    for _ in range(500):
        sizes = sorted((rng.randint(1, 4) for _ in range(3)), reverse=True)
        m1, m2 = random_chain(rng, Z3, sizes)
        for M in mods:
            check_functorial(M, m1, m2)


@settings(max_examples=40, deadline=None)
@given(seeds, sizes_strategy(4, 3))
def test_functoriality_random_z2(seed, sizes):
    m1, m2 = random_chain(rng_from(seed), Z2, sizes)
    for M in modules_over(Z2):
        check_functorial(M, m1, m2)
    C = coinvariants(v0_bar(Z2))
    f1, f2 = (FwsMorphism(m.source, m.target, m.map) for m in (m1, m2))
    assert C.act(f2.compose_after(f1)) == C.act(f1) @ C.act(f2)


# -- evaluation helpers and parsing ------------------------------------------------


def test_eval_and_act_helpers():
    dim, basis = eval_module(zero_module(Z2), L(Z2, "0,0"))
    assert dim == 0 and basis == ()
    X = L(Z2, "1,1,0")
    assert act_matrix(v0_bar(Z2), identity(X)) == ExactMatrix.identity(1)
    with pytest.raises(CategoryMismatch):
        v0_bar(Z2).dim(L(Z3, "0"))
    with pytest.raises(CategoryMismatch):
        principal_projective(L(Z2, "0"), "fsA").dim(L(Z2, "1"))


def test_parse_module_specs():
    assert parse_module("v0bar", Z2).describe() == "v0bar"
    M = parse_module("shift:1:v0bar", Z2)
    assert M.dim(L(Z2, "1")) == v0_bar(Z2).dim(L(Z2, "1,1"))
    C = parse_module("conv:ppx:0:ppx:1", Z2)
    assert C.dim(L(Z2, "0,1")) == principal_projective(L(Z2, "0,1")).dim(L(Z2, "0,1"))
    U = parse_module("push:coinv:v0bar", Z2)
    assert U.dim(plain_set(3)) == 4
    F = parse_module("fourier:ppx[fsA]:0", Z2)
    assert F.category == "fws"
    assert parse_module("ppx[fs]:0,0", TRIVIAL).dim(plain_set(3)) == 6
    for bad in ("nope", "shift:1", "shift:5:v0bar", "ppx[xx]:0", "v0bar:extra", "conv:v0bar"):
        with pytest.raises(ModuleSpecError):
            parse_module(bad, Z2)
