"""Randomized invariant suites on seeded small instances.

Each property runs on at least 500 random instances (the acceptance suite
re-runs these by importing the check functions), with fixed seeds so failures
reproduce exactly.
"""

import random

from xfam import (
    Family,
    canonical_form,
    closure_pair,
    covering_number,
    is_cross_t_intersecting,
    is_maximal_pair,
    relabel,
    star,
)
from helpers import random_cross_pair, random_family


def check_closure_properties(instances: int, seed: int = 101) -> int:
    """Closure is extensive, idempotent, and lands on a cross-intersecting
    maximal pair. Returns the number of instances actually exercised."""
    rng = random.Random(seed)
    done = 0
    while done < instances:
        n = rng.randint(4, 6)
        t = rng.randint(1, 2)
        k1 = rng.randint(t, min(4, n - 1))
        k2 = rng.randint(t, min(4, n - 1))
        got = random_cross_pair(rng, n, k1, k2, t)
        if got is None:
            continue
        f0, g0 = got
        f1, g1 = closure_pair(f0, g0, t)
        assert set(f0.members) <= set(f1.members)
        assert set(g0.members) <= set(g1.members)
        assert is_cross_t_intersecting(f1, g1, t)
        f2, g2 = closure_pair(f1, g1, t)
        assert f2.members == f1.members and g2.members == g1.members
        assert is_maximal_pair(f1, g1, t)
        done += 1
    return done


def check_star_antitone(instances: int, seed: int = 102) -> int:
    rng = random.Random(seed)
    for _ in range(instances):
        n = rng.randint(4, 7)
        k = rng.randint(1, n - 1)
        t = rng.randint(1, k)
        m = rng.randint(t, n - 1)
        small = random_family(rng, n, k, 5)
        extra = random_family(rng, n, k, 3)
        big = Family.from_masks(n, k, set(small.members) | set(extra.members))
        assert set(star(big, m, t).members) <= set(star(small, m, t).members)
    return instances


def check_canonical_invariance(families: int, perms_per_family: int, seed: int = 103) -> int:
    rng = random.Random(seed)
    for _ in range(families):
        n = rng.randint(4, 6)
        k = rng.randint(1, n - 1)
        f = random_family(rng, n, k, 5)
        base = canonical_form(f)
        for _ in range(perms_per_family):
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            assert canonical_form(relabel(f, perm)) == base
    return families


def check_covering_monotone(instances: int, seed: int = 104) -> int:
    rng = random.Random(seed)
    for _ in range(instances):
        n = rng.randint(4, 7)
        k = rng.randint(1, n - 1)
        t = rng.randint(1, k)
        small = random_family(rng, n, k, 4)
        extra = random_family(rng, n, k, 3)
        big = Family.from_masks(n, k, set(small.members) | set(extra.members))
        assert covering_number(small, t).tau <= covering_number(big, t).tau
    return instances


def check_tau_t_iff_common_subset(instances: int, seed: int = 105) -> int:
    rng = random.Random(seed)
    for _ in range(instances):
        n = rng.randint(4, 7)
        k = rng.randint(1, n - 1)
        t = rng.randint(1, k)
        f = random_family(rng, n, k, 6)
        common = f.common_mask()
        assert (covering_number(f, t).tau == t) == (common.bit_count() >= t)
    return instances


def check_cover_collections_cross_intersect(instances: int, seed: int = 106) -> int:
    """For closure-maximal pairs with both covering numbers t+1, the two
    minimum-cover collections are themselves cross t-intersecting. This needs
    n >= max(k1, k2) + t + 1: below that there is no room to extend an
    offending cover to a full member avoiding the other one (see the
    regression test for the boundary counterexample)."""
    rng = random.Random(seed)
    done = 0
    while done < instances:
        n = rng.randint(5, 7)
        t = rng.randint(1, 2)
        kmax = min(4, n - t - 1)
        if kmax < t + 1:
            continue
        k1 = rng.randint(t + 1, kmax)
        k2 = rng.randint(t + 1, kmax)
        got = random_cross_pair(rng, n, k1, k2, t)
        if got is None:
            continue
        f, g = closure_pair(*got, t)
        cf, cg = covering_number(f, t), covering_number(g, t)
        if cf.tau != t + 1 or cg.tau != t + 1:
            continue
        tf = Family.from_masks(n, t + 1, cf.covers)
        tg = Family.from_masks(n, t + 1, cg.covers)
        assert is_cross_t_intersecting(tf, tg, t)
        done += 1
    return done


def test_closure_properties():
    assert check_closure_properties(150) == 150


def test_star_antitone():
    assert check_star_antitone(250) == 250


def test_canonical_invariance():
    assert check_canonical_invariance(60, 20) == 60


def test_covering_monotone():
    assert check_covering_monotone(250) == 250


def test_tau_iff_common():
    assert check_tau_t_iff_common_subset(250) == 250


def test_cover_collections_cross_intersect():
    assert check_cover_collections_cross_intersect(80) == 80


def test_cover_collection_boundary_counterexample():
    # At n = 5, t = 2 the complete 4-uniform family is a maximal self-pair
    # with covering number 3, yet its minimum covers (all 3-subsets of [5])
    # are not 2-intersecting: the property genuinely requires
    # n >= max(k1, k2) + t + 1, not just maximality.
    full = Family.complete(5, 4)
    assert is_maximal_pair(full, full, 2)
    cov = covering_number(full, 2)
    assert cov.tau == 3 and len(cov.covers) == 10
    covers = Family.from_masks(5, 3, cov.covers)
    assert not is_cross_t_intersecting(covers, covers, 2)
