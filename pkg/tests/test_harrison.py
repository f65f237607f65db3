"""Eulerian idempotents and Harrison subcomplexes.

Oracle values: degree-2 and degree-3 coefficients are expanded by hand from
sign(s) (-1)^{des s} / (m binom(m-1, des s)); everything else is pinned by
the idempotent and commutation identities plus frozen dimension runs.
"""

from cubix.cubical import OrbitComplexBuilder, differential
from cubix.harrison import (
    check_idempotent,
    eulerian_scale,
    eulerian_terms,
    harrison_betti,
    harrison_complex,
    orbit_eulerian_matrix,
    slot_action,
    word_eulerian_matrix,
    word_slot_matrix,
)
from cubix.modules import ModuleSpec, builtin, random_basis_change
from cubix.perm import Permutation, symmetric_group


def test_eulerian_scales():
    assert [eulerian_scale(m) for m in (1, 2, 3, 4)] == [1, 2, 6, 12]


def test_eulerian_coefficients_degree_2():
    terms = {s.images: c for s, c in eulerian_terms(2)}
    assert terms == {(1, 2): 1, (2, 1): 1}


def test_eulerian_coefficients_degree_3():
    # by hand: c_id = 1/3, one-descent terms are +-1/6 by sign, c_321 = -1/3
    terms = {s.images: c for s, c in eulerian_terms(3)}
    assert terms == {
        (1, 2, 3): 2,
        (1, 3, 2): 1,
        (2, 1, 3): 1,
        (2, 3, 1): -1,
        (3, 1, 2): -1,
        (3, 2, 1): -2,
    }


def test_slot_action_commutes_with_position_action():
    from cubix.cubical import position_action

    t = Permutation((2, 3, 1))
    g = Permutation((3, 1, 2, 4))
    w = (1, 3, 2, 2)
    assert slot_action(t, position_action(g, w)) == position_action(
        g, slot_action(t, w)
    )


def test_word_eulerian_single_position_values():
    e2, s2 = word_eulerian_matrix(1, 2)
    assert s2 == 2
    assert e2.to_rows() == [[1, 1], [1, 1]]
    # columns by hand: E(e1) = (e1 - e3)/2, E(e2) = 0, E(e3) = (e3 - e1)/2
    e3, s3 = word_eulerian_matrix(1, 3)
    assert s3 == 6
    assert e3.to_rows() == [[3, 0, -3], [0, 0, 0], [-3, 0, 3]]


def test_word_eulerian_is_idempotent_and_commutes():
    for n in (1, 2, 3):
        for m in (1, 2, 3, 4):
            e, s = word_eulerian_matrix(n, m)
            assert check_idempotent(e, s)
            e2, s2 = word_eulerian_matrix(n, m + 1)
            d = differential(n, m)
            assert (d * e).scale(s2) == (e2 * d).scale(s)


def test_orbit_eulerian_is_idempotent_on_coinvariants():
    builder = OrbitComplexBuilder(builtin("regular", 3), symmetric_group(3))
    for m in (1, 2, 3, 4):
        e, s = orbit_eulerian_matrix(builder, m)
        assert check_idempotent(e, s)


def test_harrison_single_position_gives_module_dimension():
    group = symmetric_group(1)
    assert harrison_betti(builtin("trivial", 1), group, 3).bettis() == (1, 0, 0)
    wide = ModuleSpec("wide", 1, 3, ["a", "b", "c"], ())
    assert harrison_betti(wide, group, 3).bettis() == (3, 0, 0)
    moved = random_basis_change(wide, seed=11)
    assert harrison_betti(moved, group, 3).bettis() == (3, 0, 0)


def test_harrison_vanishes_for_small_builtin_modules():
    for kind in ("trivial", "regular", "lie"):
        for n in (2, 3):
            hc = harrison_complex(builtin(kind, n), symmetric_group(n), n + 2)
            assert hc.check_d_squared()
            assert hc.betti_table().bettis() == (0,) * (n + 2)


def test_harrison_dimension_runs():
    hc = harrison_complex(builtin("regular", 3), symmetric_group(3), 4)
    assert [hc.dims[m] for m in range(1, 6)] == [1, 4, 9, 16, 25]
    hc = harrison_complex(builtin("lie", 3), symmetric_group(3), 4)
    assert [hc.dims[m] for m in range(1, 6)] == [0, 1, 3, 5, 8]
    hc = harrison_complex(builtin("trivial", 3), symmetric_group(3), 4)
    assert [hc.dims[m] for m in range(1, 6)] == [1, 2, 3, 5, 7]


def test_word_slot_matrix_is_a_permutation_action():
    t = Permutation((2, 1, 3))
    u = Permutation((1, 3, 2))
    a = word_slot_matrix(t, 2, 3)
    b = word_slot_matrix(u, 2, 3)
    assert a * b == word_slot_matrix(t * u, 2, 3)
