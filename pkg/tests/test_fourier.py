import itertools

import pytest

from fwsmod.category import LabeledSet, enumerate_all_objects, hom_fws, surjections, zero_labeled
from fwsmod.groups import TRIVIAL, dual_group, parse_group
from fwsmod.linalg import ExactMatrix, rank
from fwsmod.modules import (
    CategoryMismatch,
    fourier,
    plain_set,
    principal_projective,
    projector_matrix,
    v0_bar,
)

Z2 = parse_group("Z2")
Z3 = parse_group("Z3")


def fsa_projective(G, n):
    return principal_projective(zero_labeled(G, n), "fsA")


def zero_matrix(d):
    return ExactMatrix(d, d, [{} for _ in range(d)])


def labelings(G, n):
    return list(itertools.product(G.elements, repeat=n))


@pytest.mark.parametrize("G, n, size", [(Z2, 1, 2), (Z2, 2, 3), (Z3, 1, 2)])
def test_projectors_idempotent_orthogonal_complete(G, n, size):
    M = fsa_projective(G, n)
    d = M.dim(zero_labeled(G, size))
    projs = {l: projector_matrix(M, size, l) for l in labelings(G, size)}
    total = zero_matrix(d)
    for l, P in projs.items():
        assert P @ P == P
        for l2, Q in projs.items():
            if l2 != l:
                assert P @ Q == zero_matrix(d)
        total = total + P
    assert total == ExactMatrix.identity(d)
    assert sum(rank(P) for P in projs.values()) == d


@pytest.mark.parametrize("G, n, size", [(Z2, 2, 3), (Z3, 1, 2), (Z3, 2, 2)])
def test_iterative_splitting_matches_direct_projector(G, n, size):
    M = fsa_projective(G, n)
    F = fourier(M)
    dims = F.decompose(size)
    for l in labelings(G, size):
        P = projector_matrix(M, size, l)
        r = rank(P)
        assert dims.get(l, 0) == r
        _, vecs = F.isotypic_basis(LabeledSet(dual_group(G), l))
        # every leaf vector is fixed by the direct projector
        for v in vecs:
            assert P.apply(v) == v


def test_fourier_dims_sum_to_zero_labeled_dim():
    for n in (1, 2, 3):
        M = fsa_projective(Z2, n)
        F = fourier(M)
        for size in range(5):
            total = sum(F.dim(LabeledSet(Z2, l)) for l in labelings(Z2, size))
            assert total == M.dim(zero_labeled(Z2, size))


def test_fourier_of_projective_is_sum_of_projectives():
    for n in (1, 2, 3):
        F = fourier(fsa_projective(Z2, n))
        for Y in enumerate_all_objects(Z2, 3):
            expected = sum(
                principal_projective(LabeledSet(Z2, l), "fws").dim(Y)
                for l in labelings(Z2, n)
            )
            assert F.dim(Y) == expected == len(surjections(Y.size, n))


def test_fourier_trivial_group_is_identity():
    M = principal_projective(plain_set(2), "fsA")
    F = fourier(M)
    for k in range(5):
        assert F.dim(plain_set(k)) == M.dim(plain_set(k))
    for m in hom_fws(plain_set(4), plain_set(2)):
        assert F.act(m) == M.act(m)


@pytest.mark.parametrize("G, n", [(Z2, 2), (Z3, 1)])
def test_fourier_functoriality(G, n):
    F = fourier(fsa_projective(G, n))
    D = dual_group(G)
    objs = [X for X in enumerate_all_objects(D, 3) if F.dim(X)]
    checked = 0
    for X, Y, Z in itertools.product(objs, repeat=3):
        for m1 in hom_fws(X, Y):
            for m2 in hom_fws(Y, Z):
                assert F.act(m2.compose_after(m1)) == F.act(m1) @ F.act(m2)
                checked += 1
    assert checked > 0


def test_z3_isotypic_parts_are_cyclotomic():
    F = fourier(fsa_projective(Z3, 1))
    _, vecs = F.isotypic_basis(LabeledSet(Z3, ((1,),)))
    assert vecs
    assert any(not isinstance(c, int) and getattr(c, "order", 1) == 3 for v in vecs for c in v.values())


def test_fourier_rejects_fws_input():
    with pytest.raises(CategoryMismatch):
        fourier(principal_projective(LabeledSet(Z2, ((1,),)), "fws"))
    assert fourier(v0_bar(TRIVIAL)).dim(plain_set(3)) == 1
