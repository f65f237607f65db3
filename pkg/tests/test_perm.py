from itertools import permutations

from cubix.perm import (
    Permutation,
    PermutationGroup,
    adjacent_transposition,
    cyclic_group,
    identity_permutation,
    symmetric_group,
    trivial_group,
    young_subgroup,
)


def test_composition_acts_right_to_left():
    p = Permutation((2, 3, 1))
    q = Permutation((2, 3, 1))
    # (p*q)(1) = p(q(1)) = p(2) = 3
    assert (p * q).images == (3, 1, 2)


def test_call_and_inverse():
    p = Permutation((3, 1, 4, 2))
    assert [p(i) for i in (1, 2, 3, 4)] == [3, 1, 4, 2]
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


def test_sign_multiplicative_on_s4():
    elems = [Permutation(w) for w in permutations((1, 2, 3, 4))]
    for p in elems[:8]:
        for q in elems[::3]:
            assert (p * q).sign() == p.sign() * q.sign()


def test_descents():
    assert Permutation((2, 1, 3)).descents() == 1
    assert Permutation((1, 2, 3)).descents() == 0
    assert Permutation((3, 2, 1)).descents() == 2


def test_adjacent_factorization_recomposes():
    # every element of S_5, reduced length equals inversion count
    for w in permutations((1, 2, 3, 4, 5)):
        p = Permutation(w)
        word = p.adjacent_factorization()
        assert len(word) == p.inversions()
        acc = identity_permutation(5)
        for i in word:
            acc = acc * adjacent_transposition(5, i)
        assert acc == p


def test_factorization_example():
    # (3,1,2) maps 1->3, 2->1, 3->2; equals s2 * s1
    p = Permutation((3, 1, 2))
    s1 = adjacent_transposition(3, 1)
    s2 = adjacent_transposition(3, 2)
    assert s2 * s1 == p
    assert p.adjacent_factorization() == [2, 1]


def test_symmetric_group_enumeration():
    s3 = symmetric_group(3)
    assert s3.order == 6
    assert s3.is_symmetric()
    words = [p.images for p in s3.elements]
    assert words == sorted(words)


def test_cyclic_and_trivial_groups():
    c4 = cyclic_group(4)
    assert c4.order == 4
    assert Permutation((2, 3, 4, 1)) in c4
    assert Permutation((2, 1, 4, 3)) not in c4
    assert trivial_group(3).order == 1


def test_young_subgroup_orders():
    assert young_subgroup((2, 1)).order == 2
    assert young_subgroup((2, 2)).order == 4
    assert young_subgroup((3, 0, 2)).order == 12
    assert young_subgroup((1, 1, 1)).order == 1
    # a Young subgroup only permutes within blocks
    h = young_subgroup((2, 2))
    for p in h.elements:
        assert {p(1), p(2)} == {1, 2}
        assert {p(3), p(4)} == {3, 4}


def test_group_elements_cached_and_deterministic():
    g = symmetric_group(4)
    assert g.elements is g.elements
    assert PermutationGroup(4, g.generators).elements == g.elements
