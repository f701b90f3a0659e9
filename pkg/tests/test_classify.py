import pytest

from xfam import (
    Family,
    anchored_family,
    classify_fact_2_1,
    classify_pair_theorem_1_1,
    classify_theorem_1_2,
    construct_A,
    construct_B,
    construct_C1,
    construct_C2,
    construct_H,
    enumerate_maximal_t_intersecting,
    mask_of,
    maximal_cross_pairs,
    maximal_cross_tuples,
    theorem_1_2_instances,
)


def fam(n, k, *sets):
    return Family.from_sets(n, k, sets)


def test_preconditions():
    with pytest.raises(ValueError):
        classify_theorem_1_2(fam(5, 2, (1, 2)), 1)  # not maximal
    with pytest.raises(ValueError):
        classify_theorem_1_2(anchored_family(6, 3, mask_of([1])), 1)  # tau = t
    with pytest.raises(ValueError):
        classify_fact_2_1(fam(6, 3, (1, 2, 3)), 1)  # not (t+1)-uniform


def test_triangle_matches_both_shapes():
    tri = fam(5, 2, (1, 2), (1, 3), (2, 3))
    m = classify_theorem_1_2(tri, 1)
    names = {x[0] for x in m.all_matches}
    assert "T1.2-i" in names and "T1.2-iii" in names
    assert m.template == "T1.2-i"
    iii = [w for (name, w) in m.all_matches if name == "T1.2-iii"]
    assert all(w["residual_sizes"] == (1, 1) for w in iii)


def test_rigid_templates_match():
    m = classify_theorem_1_2(construct_A(7, 4, 2), 2)
    assert m.template == "T1.2-i"
    h = construct_H(8, 4, 2, (3, 4, 5), (3, 4, 5))
    m = classify_theorem_1_2(h, 2)
    assert "T1.2-ii" in {x[0] for x in m.all_matches}


def test_generated_instances_match_their_template():
    for (n, k, t) in [(6, 3, 1), (7, 4, 2)]:
        for family, name, _ in theorem_1_2_instances(n, k, t):
            m = classify_theorem_1_2(family, t)
            assert name in {x[0] for x in m.all_matches}, (n, k, t, name)


def test_fact_2_1_examples():
    tri = fam(5, 2, (1, 2), (1, 3), (2, 3))
    assert classify_fact_2_1(tri, 1).template == "F2.1-simplex"
    star = fam(4, 2, (1, 2), (1, 3), (1, 4))
    m = classify_fact_2_1(star, 1)
    assert m.template == "F2.1-star" and m.witnesses["T"] == (1,)
    simplex = Family.from_masks(6, 3, Family.complete(4, 3).members)
    assert classify_fact_2_1(simplex, 2).template == "F2.1-simplex"


def test_pair_classification():
    a2 = construct_A(6, 2, 1)
    m = classify_pair_theorem_1_1(a2, a2, 1)
    assert "T1.1-AA" in {x[0] for x in m.all_matches}

    b1 = construct_B(6, 2, (1, 3, 2, 4))
    b2 = construct_B(6, 2, (1, 2, 3, 4))
    m = classify_pair_theorem_1_1(b1, b2, 1)
    names = {x[0] for x in m.all_matches}
    assert "T1.1-BB" in names
    assert "T1.1-HH" in names  # overlap-1 H pairs coincide with the B pair

    c1 = construct_C1(6, 3, 1)
    c2 = construct_C2(6, 2, 1, 3)
    m = classify_pair_theorem_1_1(c1, c2, 1)
    assert "T1.1-CC" in {x[0] for x in m.all_matches}
    m = classify_pair_theorem_1_1(c2, c1, 1)
    assert "T1.1-CC" in {x[0] for x in m.all_matches}

    hk = construct_H(7, 3, 1, (2, 3, 4), (2, 3))
    hl = construct_H(7, 2, 1, (2, 3), (2, 3, 4))
    m = classify_pair_theorem_1_1(hk, hl, 1)
    assert "T1.1-HH" in {x[0] for x in m.all_matches}


def test_pair_preconditions():
    with pytest.raises(ValueError):
        classify_pair_theorem_1_1(fam(6, 2, (1, 2)), fam(6, 2, (3, 4)), 1)
    star = anchored_family(6, 2, mask_of([1]))
    with pytest.raises(ValueError):
        classify_pair_theorem_1_1(star, star, 1)  # tau = t


def test_residual_sweeps():
    # pairs over the universe {3,4,5,6} agree with the definition oracle on
    # the isomorphic ground set [4] (same counts, nonempty sides)
    from helpers import brute_maximal_pairs

    pairs = maximal_cross_pairs(6, mask_of([3, 4, 5, 6]), 2, 2)
    nonempty = [p for p in pairs if p[0] and p[1]]
    assert len(nonempty) == len(brute_maximal_pairs(4, 2, 2, 1))
    assert len(pairs) == len(nonempty) + 2  # plus the two empty-sided sweeps
    tuples = maximal_cross_tuples(6, mask_of([3, 4, 5, 6]), 2, 3)
    for tup in tuples:
        # round-robin fixed point: each component is the star of the others
        from xfam.core import _star_masks

        for i, members in enumerate(tup):
            others = [m for j, o in enumerate(tup) if j != i for m in o]
            assert tuple(sorted(members)) == _star_masks(others, 6, 2, 1, mask_of([3, 4, 5, 6]))


def test_unmatched_returns_none_template():
    # a maximal family with tau = t+1 over a tiny ground set where the
    # composite templates cannot fit is still matched by the simplex shape;
    # classify on the smallest instance to confirm template order stability
    m = classify_theorem_1_2(fam(4, 2, (1, 2), (1, 3), (2, 3)), 1)
    assert m.matched


def test_two_way_light():
    n, k, t = 6, 3, 1
    enum = {f.members for f in enumerate_maximal_t_intersecting(n, k, t)}
    inst = theorem_1_2_instances(n, k, t)
    assert inst, "generator must produce instances"
    for family, name, wit in inst:
        assert family.members in enum, (name, wit)
