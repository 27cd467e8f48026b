import itertools
from fractions import Fraction

import pytest

from fwsmod.cyclotomic import root_of_unity
from fwsmod.groups import (
    GroupSpecError,
    TRIVIAL,
    FiniteAbelianGroup,
    characters,
    parse_element,
    parse_group,
    parse_labels,
    subgroup_and_quotient,
)


def test_parse_group_examples():
    assert parse_group("1") == TRIVIAL and TRIVIAL.order == 1
    G = parse_group("Z2xZ4")
    assert (G.order, G.exponent) == (8, 4)
    G = parse_group("Z6")
    assert (G.order, G.exponent) == (6, 6)


@pytest.mark.parametrize("bad, token", [("Z2xY3", "Y3"), ("", ""), ("Z2x", ""), ("2", "2")])
def test_parse_group_names_bad_token(bad, token):
    with pytest.raises(GroupSpecError) as exc:
        parse_group(bad)
    assert token in str(exc.value)


@pytest.mark.parametrize("bad", ["Z1", "Z0", "Z2xZ1"])
def test_parse_group_rejects_small_factors(bad):
    with pytest.raises(GroupSpecError):
        parse_group(bad)


def test_element_and_label_literals():
    G = parse_group("Z2xZ4")
    assert parse_element(G, "1.3") == (1, 3)
    assert parse_labels(G, "1.0,0.3") == ((1, 0), (0, 3))
    assert parse_labels(parse_group("Z2"), "1,1,0") == ((1,), (1,), (0,))
    assert parse_labels(G, "") == ()
    assert parse_element(TRIVIAL, "0") == ()
    for bad in ("1", "2.0", "a.b", "1.4"):
        with pytest.raises(GroupSpecError):
            parse_element(G, bad)
    assert G.format_element((1, 3)) == "1.3"


def test_subgroup_examples():
    H, Q = subgroup_and_quotient(parse_group("Z2"), {(1,)})
    assert H.order == 2 and Q.size == 1
    H, Q = subgroup_and_quotient(parse_group("Z4"), {(2,)})
    assert H.order == 2 and Q.size == 2
    G = parse_group("Z2xZ2")
    H, Q = subgroup_and_quotient(G, {(1, 0)})
    assert Q.size == 2
    H, Q = subgroup_and_quotient(G, set())
    assert H.order == 1 and Q.size == 4


def _all_groups_up_to(n):
    out = [TRIVIAL]
    for k in range(2, n + 1):
        out.append(FiniteAbelianGroup((k,)))
    for a in range(2, n + 1):
        for b in range(a, n + 1):
            if a * b <= n:
                out.append(FiniteAbelianGroup((a, b)))
    out.append(FiniteAbelianGroup((2, 2, 2)))
    out.append(FiniteAbelianGroup((2, 2, 4)))
    return out


def test_lagrange_and_cosets_exhaustive():
    for G in _all_groups_up_to(16):
        gen_sets = [set()] + [{a} for a in G.elements]
        gen_sets += [{a, b} for a, b in itertools.combinations(G.elements, 2)][:40]
        for gens in gen_sets:
            H, Q = subgroup_and_quotient(G, gens)
            assert G.order % H.order == 0
            assert Q.size * H.order == G.order
            members = set(H.element_list)
            assert G.zero in members
            assert all(G.add(a, b) in members and G.neg(a) in members
                       for a in members for b in members)
            assert Q.coset_of[G.zero] == 0
            for a in G.elements:
                r = Q.reduce(a)
                assert G.sub(a, r) in members
                assert r == min(b for b in G.elements if G.sub(a, b) in members)


def test_characters_small():
    chars = characters(TRIVIAL)
    assert len(chars) == 1 and chars[0](()) == 1
    vals = {chi((1,)) for chi in characters(parse_group("Z2"))}
    assert vals == {1, -1}


def test_character_orthogonality_z3():
    G = parse_group("Z3")
    chars = characters(G)
    for i, chi in enumerate(chars):
        for j, psi in enumerate(chars):
            s = sum((chi(a) * psi(a).conjugate() for a in G.elements), root_of_unity(3, 0) * 0)
            assert s == (3 if i == j else 0)


def test_character_orthogonality_up_to_12():
    for G in _all_groups_up_to(12):
        chars = characters(G)
        assert len(chars) == G.order
        for chi in chars:
            for a in G.elements:
                v = chi(a)
                assert v ** G.element_order(a) == 1
            for psi in chars:
                s = sum(chi(a) * psi(G.neg(a)) for a in G.elements) * Fraction(1, G.order)
                assert s == (1 if chi == psi else 0)


def test_character_is_homomorphism():
    G = parse_group("Z2xZ4")
    for chi in characters(G):
        for a in G.elements:
            for b in G.elements:
                assert chi(G.add(a, b)) == chi(a) * chi(b)
