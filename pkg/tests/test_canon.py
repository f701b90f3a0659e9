import random

import pytest

from xfam import (
    Family,
    anchored_family,
    canonical_form,
    canonical_form_tuple,
    are_isomorphic,
    are_isomorphic_pairs,
    construct_A,
    construct_H,
    mask_of,
    relabel,
)


def fam(n, k, *sets):
    return Family.from_sets(n, k, sets)


def test_relabelled_triangles_agree():
    t1 = fam(5, 2, (1, 2), (1, 3), (2, 3))
    t2 = fam(5, 2, (3, 4), (3, 5), (4, 5))
    assert canonical_form(t1) == canonical_form(t2)
    assert are_isomorphic(t1, t2)


def test_star_and_triangle_differ():
    star4 = fam(4, 2, (1, 2), (1, 3), (1, 4))
    tri4 = fam(4, 2, (1, 2), (1, 3), (2, 3))
    assert canonical_form(star4) != canonical_form(tri4)


def test_identity():
    f = fam(6, 3, (1, 2, 3), (2, 3, 4))
    assert canonical_form(f) == canonical_form(f)


def test_ground_set_size_is_part_of_the_form():
    t4 = fam(4, 2, (1, 2), (1, 3), (2, 3))
    t5 = fam(5, 2, (1, 2), (1, 3), (2, 3))
    assert canonical_form(t4) != canonical_form(t5)


def test_invariance_under_random_permutations():
    rng = random.Random(11)
    cases = [
        construct_A(8, 3, 1),
        construct_H(8, 3, 1, (2, 3, 4), (2, 3, 5)),
        anchored_family(8, 3, mask_of([2])),
        Family.complete(6, 3),
        Family(6, 3, ()),
        fam(7, 3, (1, 2, 3), (1, 2, 4), (3, 6, 7)),
    ]
    for f in cases:
        base = canonical_form(f)
        for _ in range(25):
            perm = list(range(1, f.n + 1))
            rng.shuffle(perm)
            assert canonical_form(relabel(f, perm)) == base


def test_pair_canonical_form():
    rng = random.Random(13)
    f = construct_A(7, 3, 1)
    g = anchored_family(7, 2, mask_of([1, 2]))
    base = canonical_form_tuple([f, g])
    for _ in range(20):
        perm = list(range(1, 8))
        rng.shuffle(perm)
        assert canonical_form_tuple([relabel(f, perm), relabel(g, perm)]) == base
    assert are_isomorphic_pairs((f, g), (relabel(f, perm), relabel(g, perm)))
    # the pair is ordered
    assert canonical_form_tuple([f, g]) != canonical_form_tuple([g, f])


def test_pairs_not_jointly_isomorphic():
    # (star@1, star@1) vs (star@1, star@2): the joint relabeling must move
    # both sides at once, so these differ even though sides are isomorphic
    s1 = anchored_family(5, 2, mask_of([1]))
    s2 = anchored_family(5, 2, mask_of([2]))
    assert canonical_form_tuple([s1, s1]) != canonical_form_tuple([s1, s2])


def test_mismatched_ground_sets_rejected():
    with pytest.raises(ValueError):
        canonical_form_tuple([fam(4, 2, (1, 2)), fam(5, 2, (1, 2))])
