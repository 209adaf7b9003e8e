from __future__ import annotations

import itertools

import pytest

from dicayley.abelian import AbelianGroup
from dicayley.dicyclic import (
    DicyclicGroup,
    connection_set_from_elements,
    construct_dicyclic,
    generated_subgroup,
    make_connection_set,
    split_lengths,
    symmetric_connection_sets,
    word_lengths,
)
from dicayley.sweep import enumerate_dicyclic_groups


def q8() -> DicyclicGroup:
    return DicyclicGroup(AbelianGroup([4]), (2,))


def test_construction():
    assert construct_dicyclic(AbelianGroup([4]), (2,)).order == 8
    assert construct_dicyclic(AbelianGroup([6]), (3,)).order == 12
    with pytest.raises(ValueError):
        construct_dicyclic(AbelianGroup([3]), (1,))
    with pytest.raises(ValueError):
        construct_dicyclic(AbelianGroup([2, 2]), (1, 0))  # exponent 2
    with pytest.raises(ValueError):
        construct_dicyclic(AbelianGroup([4]), (1,))  # y not an involution


def test_presentation_relations():
    G = q8()
    x = (1, (0,))
    assert G.mul(x, x) == (0, G.y)
    assert G.inv((1, (1,))) == (1, (3,))
    for a in G.A.elements:
        assert G.mul(G.mul(x, (0, a)), G.inv(x)) == (0, G.A.neg(a))


@pytest.mark.parametrize("G", enumerate_dicyclic_groups(24), ids=repr)
def test_associativity_and_inverses(G):
    els = G.elements
    e = G.identity
    for g in els:
        assert G.mul(g, G.inv(g)) == e and G.mul(G.inv(g), g) == e
        assert G.mul(g, e) == g == G.mul(e, g)
    for g, h, k in itertools.product(els, repeat=3):
        assert G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k))


def test_connection_set_flags():
    G = q8()
    S = make_connection_set(G, {(1,), (3,)}, {(0,), (2,)})
    assert S.identity_free and S.symmetric and S.generating
    assert not make_connection_set(G, set(), {(0,), (1,)}).symmetric
    assert not make_connection_set(G, {(0,)}, set()).identity_free
    with pytest.raises(ValueError):
        make_connection_set(G, set(), {(0,), (1,)}).require()


def test_split_symmetry_matches_elementwise_inversion():
    G = q8()
    els = G.elements
    for mask in range(1 << len(els)):
        subset = {g for i, g in enumerate(els) if mask >> i & 1}
        S = connection_set_from_elements(G, subset)
        elementwise = all(G.inv(g) in subset for g in subset)
        assert S.symmetric == elementwise


@pytest.mark.parametrize("G", enumerate_dicyclic_groups(16)[:1], ids=repr)
def test_symmetric_enumeration_matches_brute_force(G):
    els = [g for g in G.elements if g != G.identity]
    brute = set()
    for r in range(len(els) + 1):
        for subset in itertools.combinations(els, r):
            if all(G.inv(g) in subset for g in subset):
                brute.add(frozenset(subset))
    enumerated = [S.elements for S in symmetric_connection_sets(G)]
    assert len(enumerated) == len(set(enumerated)) == len(brute) == 16
    assert set(enumerated) == brute


def test_generated_subgroup_examples():
    G = q8()
    assert len(generated_subgroup(G, make_connection_set(G, {(1,), (3,)}, {(0,), (2,)}))) == 8
    assert generated_subgroup(G, make_connection_set(G, set(), set())) == {G.identity}
    assert generated_subgroup(G, make_connection_set(G, set(), {(0,), (2,)})) == {
        (0, (0,)),
        (0, (2,)),
        (1, (0,)),
        (1, (2,)),
    }


def test_word_lengths_q8_example():
    G = q8()
    S = make_connection_set(G, {(1,), (3,)}, {(0,), (2,)})
    lengths = word_lengths(G, S)
    on_a, on_xa = split_lengths(G, S, lengths)
    assert [on_a[(a,)] for a in range(4)] == [0, 1, 2, 1]
    assert [on_xa[(a,)] for a in range(4)] == [1, 2, 1, 2]
    assert lengths[G.identity] == 0
    assert all(lengths[s] == 1 for s in S.elements)


def test_word_lengths_need_generating_set():
    G = q8()
    with pytest.raises(ValueError):
        word_lengths(G, make_connection_set(G, set(), {(0,), (2,)}))


@pytest.mark.parametrize("G", enumerate_dicyclic_groups(16), ids=repr)
def test_length_symmetries(G):
    A = G.A
    for S in symmetric_connection_sets(G):
        if not S.generating:
            continue
        lengths = word_lengths(G, S)
        for g in G.elements:
            assert lengths[g] == lengths[G.inv(g)]
        _, on_xa = split_lengths(G, S, lengths)
        for a in A.elements:
            assert on_xa[A.add(G.y, a)] == on_xa[a]
            if S.s2_symmetric:
                assert on_xa[A.neg(a)] == on_xa[a]
