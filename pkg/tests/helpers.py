"""Independent brute-force oracles shared by the test modules.

These deliberately avoid the library's search strategies: covers are found by
enumerating every subset of the union by size, maximal families by sweeping
every subfamily of the complete family, and maximal pairs straight from the
definition (no single member can be added to either side). Slow but
unarguable at tiny scale.
"""

from __future__ import annotations

import random
from itertools import combinations

from xfam import Family, elements_of, is_cross_t_intersecting, mask_of


def brute_covers(family: Family, t: int) -> tuple[int, tuple[int, ...]]:
    """Minimum cover size and all covers of that size, by subset enumeration
    over the union of the family."""
    union = elements_of(family.union_mask())
    for size in range(t, len(union) + 1):
        found = []
        for cand in combinations(union, size):
            cm = mask_of(cand)
            if all((cm & m).bit_count() >= t for m in family.members):
                found.append(cm)
        if found:
            return size, tuple(sorted(found))
    raise AssertionError("union always covers")


def brute_maximal_families(n: int, k: int, t: int) -> list[tuple[int, ...]]:
    """All maximal t-intersecting families via a sweep over every subfamily
    of the complete family; only usable while C(n, k) stays tiny."""
    verts = sorted(mask_of(c) for c in combinations(range(1, n + 1), k))
    V = len(verts)
    assert V <= 12, "oracle restricted to tiny instances"
    out = []
    for sub in range(1, 1 << V):
        members = [verts[i] for i in range(V) if (sub >> i) & 1]
        ok = all(
            (a & b).bit_count() >= t for i, a in enumerate(members) for b in members[i + 1 :]
        )
        if not ok:
            continue
        extendable = any(
            v not in members and all((v & m).bit_count() >= t for m in members) for v in verts
        )
        if not extendable:
            out.append(tuple(members))
    return sorted(out)


def brute_maximal_pairs(n: int, k1: int, k2: int, t: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All maximal cross-t-intersecting pairs straight from the definition:
    cross-intersecting, and no single set extends either side."""
    verts1 = sorted(mask_of(c) for c in combinations(range(1, n + 1), k1))
    verts2 = sorted(mask_of(c) for c in combinations(range(1, n + 1), k2))
    assert len(verts1) <= 6 and len(verts2) <= 6, "oracle restricted to tiny instances"
    out = []
    for s1 in range(1, 1 << len(verts1)):
        f = [verts1[i] for i in range(len(verts1)) if (s1 >> i) & 1]
        for s2 in range(1, 1 << len(verts2)):
            g = [verts2[j] for j in range(len(verts2)) if (s2 >> j) & 1]
            if not all((a & b).bit_count() >= t for a in f for b in g):
                continue
            if any(v not in f and all((v & b).bit_count() >= t for b in g) for v in verts1):
                continue
            if any(v not in g and all((v & a).bit_count() >= t for a in f) for v in verts2):
                continue
            out.append((tuple(f), tuple(g)))
    return sorted(out)


def random_family(rng: random.Random, n: int, k: int, max_members: int) -> Family:
    verts = [mask_of(c) for c in combinations(range(1, n + 1), k)]
    count = rng.randint(1, min(max_members, len(verts)))
    return Family.from_masks(n, k, rng.sample(verts, count))


def random_cross_pair(rng: random.Random, n: int, k1: int, k2: int, t: int, tries: int = 60):
    """A random nonempty cross-t-intersecting pair, or None."""
    verts2 = [mask_of(c) for c in combinations(range(1, n + 1), k2)]
    for _ in range(tries):
        f = random_family(rng, n, k1, 4)
        compatible = [v for v in verts2 if all((v & m).bit_count() >= t for m in f.members)]
        if not compatible:
            continue
        g = Family.from_masks(n, k2, rng.sample(compatible, rng.randint(1, min(3, len(compatible)))))
        assert is_cross_t_intersecting(f, g, t)
        return f, g
    return None
