"""Ground-set, subset and family primitives.

Subsets of the ground set [n] = {1, ..., n} are plain Python ints used as
bitmasks: element i corresponds to bit i-1, so n <= 64 keeps every subset in
one machine word (Python ints are unbounded, but the cap keeps kernels cheap
and file formats unambiguous). A Family is an immutable k-uniform collection
of such masks in strictly increasing mask order.

On top of the raw masks this module provides the intersection predicates,
exact t-covering-number computation (all minimum covers, not just one), the
star operator (largest m-uniform family cross-t-intersecting a given one),
closure of pairs/tuples to maximal cross-t-intersecting position, and the
family text format used by the command line tools.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_GROUND_SET = 64

# numpy pairwise kernels beat pure loops only past this many (f, g) pairs
_NP_PAIR_CUTOFF = 20_000
# exhaustive cover sweep is used while C(|union|, s) stays below this
_COVER_SWEEP_CAP = 30_000


def mask_of(elements: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based elements."""
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """1-based elements of a mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def intersection_size(a: int, b: int) -> int:
    """|a ∩ b| for two subset masks over the same ground set."""
    return (a & b).bit_count()


def validate_params(n: int, k: int, t: int) -> None:
    if not (1 <= t <= k <= n <= MAX_GROUND_SET):
        raise ValueError(f"need 1 <= t <= k <= n <= {MAX_GROUND_SET}, got n={n} k={k} t={t}")


@dataclass(frozen=True)
class Params:
    """Ground-set size, uniformity and intersection threshold."""

    n: int
    k: int
    t: int

    def __post_init__(self) -> None:
        validate_params(self.n, self.k, self.t)


@dataclass(frozen=True)
class Family:
    """A k-uniform family over [n]; members are masks, strictly increasing."""

    n: int
    k: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (0 <= self.k <= self.n <= MAX_GROUND_SET):
            raise ValueError(f"bad family parameters n={self.n} k={self.k}")
        limit = full_mask(self.n)
        prev = -1
        for m in self.members:
            if m <= prev:
                raise ValueError("members must be strictly increasing (sorted, duplicate-free)")
            if m & ~limit:
                raise ValueError(f"member {m:#x} has bits above position n={self.n}")
            if m.bit_count() != self.k:
                raise ValueError(f"member {elements_of(m)} is not a {self.k}-set")
            prev = m

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> "Family":
        return cls(n, k, tuple(sorted(set(masks))))

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "Family":
        return cls.from_masks(n, k, (mask_of(s) for s in sets))

    @classmethod
    def complete(cls, n: int, k: int) -> "Family":
        """All k-subsets of [n]."""
        return cls(n, k, tuple(sorted(mask_of(c) for c in combinations(range(1, n + 1), k))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    def to_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(m) for m in self.members)

    def union_mask(self) -> int:
        u = 0
        for m in self.members:
            u |= m
        return u

    def common_mask(self) -> int:
        if not self.members:
            return full_mask(self.n)
        c = full_mask(self.n)
        for m in self.members:
            c &= m
        return c


def relabel(family: Family, perm: Sequence[int]) -> Family:
    """Apply a permutation of [n] (perm[i-1] is the image of element i)."""
    if sorted(perm) != list(range(1, family.n + 1)):
        raise ValueError("perm must be a permutation of [n]")
    masks = []
    for m in family.members:
        masks.append(mask_of(perm[e - 1] for e in elements_of(m)))
    return Family.from_masks(family.n, family.k, masks)


def interval_family(n: int, k: int, S: int, M: int) -> Family:
    """All k-subsets F with S ⊆ F ⊆ M; rejects S ⊄ M and k out of range."""
    if S & ~M:
        raise ValueError("anchor S must be contained in M")
    s, mm = S.bit_count(), M.bit_count()
    if not (s <= k <= mm):
        raise ValueError(f"need |S| <= k <= |M|, got |S|={s} k={k} |M|={mm}")
    free = elements_of(M & ~S)
    masks = [S | mask_of(c) for c in combinations(free, k - s)]
    return Family.from_masks(n, k, masks)


def anchored_family(n: int, k: int, S: int) -> Family:
    """All k-subsets of [n] containing S."""
    return interval_family(n, k, S, full_mask(n))


def restrict(family: Family, S: int) -> Family:
    """Subfamily of members containing S."""
    return Family(family.n, family.k, tuple(m for m in family.members if S & ~m == 0))


def _min_pairwise_intersection(fs: Sequence[int], gs: Sequence[int]) -> int:
    a = np.array(fs, dtype=np.uint64)
    b = np.array(gs, dtype=np.uint64)
    best = 64
    # chunk the outer product to bound memory at a few MB
    step = max(1, _NP_PAIR_CUTOFF // max(1, len(b)))
    for i in range(0, len(a), step):
        counts = np.bitwise_count(a[i : i + step, None] & b[None, :])
        best = min(best, int(counts.min()))
        if best == 0:
            break
    return best


def is_cross_t_intersecting(F: Family, G: Family, t: int) -> bool:
    """True iff |f ∩ g| >= t for every f in F, g in G (vacuously true if empty)."""
    if F.n != G.n:
        raise ValueError("families live over different ground sets")
    if not F.members or not G.members:
        return True
    if min(F.k, G.k) < t:
        return False
    if len(F.members) * len(G.members) >= _NP_PAIR_CUTOFF:
        return _min_pairwise_intersection(F.members, G.members) >= t
    for f in F.members:
        for g in G.members:
            if (f & g).bit_count() < t:
                return False
    return True


def is_t_intersecting(F: Family, t: int) -> bool:
    """True iff every unordered pair of members meets in >= t elements."""
    members = F.members
    for i in range(len(members)):
        fi = members[i]
        for g in members[i + 1 :]:
            if (fi & g).bit_count() < t:
                return False
    return True


@dataclass(frozen=True)
class CoverStructure:
    """Minimum t-cover size together with ALL covers of that size."""

    tau: int
    covers: tuple[int, ...]
    union: int


def _covers_by_sweep(members: Sequence[int], t: int, size: int, universe: int) -> list[int]:
    elems = elements_of(universe)
    cands = [mask_of(c) for c in combinations(elems, size)]
    if not cands:
        return []
    mem = np.array(members, dtype=np.uint64)
    ca = np.array(cands, dtype=np.uint64)
    ok = []
    step = max(1, _NP_PAIR_CUTOFF // max(1, len(mem)))
    for i in range(0, len(ca), step):
        counts = np.bitwise_count(ca[i : i + step, None] & mem[None, :])
        good = np.where((counts >= t).all(axis=1))[0]
        ok.extend(cands[i + int(j)] for j in good)
    return ok


def _covers_by_branching(members: Sequence[int], t: int, size: int) -> list[int]:
    """All size-`size` covers via deficit branching; complete because any such
    cover must hit a deficient member, and no smaller cover exists at this
    depth of the iterative deepening."""
    found: set[int] = set()
    seen: set[int] = set()

    def dfs(partial: int) -> None:
        if partial in seen:
            return
        seen.add(partial)
        budget = size - partial.bit_count()
        deficient = 0
        for m in members:
            need = t - (m & partial).bit_count()
            if need > 0:
                if need > budget:
                    return
                deficient = m
                break
        if not deficient:
            # iterative deepening guarantees no cover below the current size
            assert budget == 0
            found.add(partial)
            return
        if budget == 0:
            return
        rest = deficient & ~partial
        while rest:
            low = rest & -rest
            dfs(partial | low)
            rest ^= low

    dfs(0)
    return sorted(found)


def covering_number(family: Family, t: int) -> CoverStructure:
    """Exact minimum t-cover size tau, all covers of size tau, and their union.

    Iterative deepening on the cover size, candidates restricted to the union
    of the family (elements outside it never help a minimum cover).
    """
    if not family.members:
        raise ValueError("covering number is undefined for the empty family")
    if t > family.k:
        raise ValueError(f"no t-cover can exist for t={t} > k={family.k}")
    common = family.common_mask()
    if common.bit_count() >= t:
        covers = sorted(mask_of(c) for c in combinations(elements_of(common), t))
        union = 0
        for c in covers:
            union |= c
        return CoverStructure(t, tuple(covers), union)
    universe = family.union_mask()
    u = universe.bit_count()
    for size in range(t + 1, u + 1):
        if comb(u, size) <= _COVER_SWEEP_CAP:
            covers = _covers_by_sweep(family.members, t, size, universe)
        else:
            covers = _covers_by_branching(family.members, t, size)
        if covers:
            union = 0
            for c in covers:
                union |= c
            return CoverStructure(size, tuple(sorted(covers)), union)
    raise AssertionError("unreachable: the union of the family covers it")


def _star_masks(members: Sequence[int], n: int, m: int, t: int, universe: int) -> tuple[int, ...]:
    cand_elems = elements_of(universe)
    if m > len(cand_elems):
        return ()
    total = comb(len(cand_elems), m)
    if members and total * len(members) >= _NP_PAIR_CUTOFF:
        cands = [mask_of(c) for c in combinations(cand_elems, m)]
        mem = np.array(members, dtype=np.uint64)
        ca = np.array(cands, dtype=np.uint64)
        keep: list[int] = []
        step = max(1, _NP_PAIR_CUTOFF // max(1, len(mem)))
        for i in range(0, len(ca), step):
            counts = np.bitwise_count(ca[i : i + step, None] & mem[None, :])
            good = np.where((counts >= t).all(axis=1))[0]
            keep.extend(cands[i + int(j)] for j in good)
        return tuple(sorted(keep))
    out = []
    for c in combinations(cand_elems, m):
        g = mask_of(c)
        if all((g & f).bit_count() >= t for f in members):
            out.append(g)
    return tuple(sorted(out))


def star(family: Family, m: int, t: int, universe: int | None = None) -> Family:
    """The largest m-uniform family cross-t-intersecting with `family`.

    Antitone in the input; star of the empty family is the complete family.
    `universe` restricts candidate members to subsets of the given mask.
    """
    if universe is None:
        universe = full_mask(family.n)
    return Family(family.n, m, _star_masks(family.members, family.n, m, t, universe))


def closure_pair(F: Family, G: Family, t: int) -> tuple[Family, Family]:
    """Alternate star applications until a fixed point: the unique maximal
    cross-t-intersecting pair containing (F, G). Rejects invalid input."""
    if not F.members or not G.members:
        raise ValueError("closure of an empty-sided pair is degenerate; both sides must be nonempty")
    if not is_cross_t_intersecting(F, G, t):
        raise ValueError("input pair is not cross t-intersecting")
    while True:
        G2 = star(F, G.k, t)
        F2 = star(G2, F.k, t)
        if F2.members == F.members and G2.members == G.members:
            return F, G
        F, G = F2, G2


def closure_tuple(families: Sequence[Family], t: int) -> tuple[Family, ...]:
    """Round-robin star updates until a fixed point for r pairwise
    cross-t-intersecting families."""
    fams = list(families)
    if any(not f.members for f in fams):
        raise ValueError("closure of a tuple with an empty side is degenerate")
    for i in range(len(fams)):
        for j in range(i + 1, len(fams)):
            if not is_cross_t_intersecting(fams[i], fams[j], t):
                raise ValueError(f"families {i} and {j} are not cross t-intersecting")
    n = fams[0].n
    # update order 2..r then 1, so the two-component case coincides with
    # closure_pair (whose first star application grows the second side)
    order = list(range(1, len(fams))) + [0]
    changed = True
    while changed:
        changed = False
        for i in order:
            others = [m for j, f in enumerate(fams) if j != i for m in f.members]
            new = Family(n, fams[i].k, _star_masks(others, n, fams[i].k, t, full_mask(n)))
            if new.members != fams[i].members:
                fams[i] = new
                changed = True
    return tuple(fams)


def is_maximal_pair(F: Family, G: Family, t: int) -> bool:
    """True iff the pair is a star fixed point (hence maximal)."""
    return star(G, F.k, t).members == F.members and star(F, G.k, t).members == G.members


def is_maximal_t_intersecting(F: Family, t: int) -> bool:
    """True iff no k-set outside F meets every member in >= t elements."""
    if not is_t_intersecting(F, t):
        raise ValueError("input family is not t-intersecting")
    return star(F, F.k, t).members == F.members


# ---------------------------------------------------------------------------
# family text format: optional "# n=<n> k=<k>" header, one member per line
# as space-separated 1-based element indices


def family_to_text(family: Family) -> str:
    lines = [f"# n={family.n} k={family.k}"]
    for m in family.members:
        lines.append(" ".join(str(e) for e in elements_of(m)))
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> Family:
    n = k = None
    rows: list[tuple[int, ...]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].replace(",", " ").split():
                if token.startswith("n="):
                    n = int(token[2:])
                elif token.startswith("k="):
                    k = int(token[2:])
            continue
        rows.append(tuple(sorted(int(x) for x in line.split())))
    if rows:
        sizes = {len(r) for r in rows}
        if len(sizes) != 1:
            raise ValueError("family file mixes member sizes")
        inferred_k = sizes.pop()
    elif k is None:
        raise ValueError("empty family file needs an explicit '# n=.. k=..' header")
    else:
        inferred_k = k
    if k is not None and rows and k != inferred_k:
        raise ValueError(f"header says k={k} but members have size {inferred_k}")
    if n is None:
        n = max((max(r) for r in rows), default=0)
    return Family.from_sets(n, inferred_k, rows)


def write_family(family: Family, path: str | os.PathLike[str]) -> None:
    with io.open(path, "w", encoding="utf-8") as fh:
        fh.write(family_to_text(family))


def read_family(path: str | os.PathLike[str]) -> Family:
    with io.open(path, "r", encoding="utf-8") as fh:
        return family_from_text(fh.read())
