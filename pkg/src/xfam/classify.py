"""Template matching for maximal families with covering number t+1.

A maximal t-intersecting family whose minimum t-covers have size t+1 realizes
at least one of four shapes; the matcher recovers candidate anchors from the
cover collection (the anchors are cover-determined, so no blind permutation
search is needed), rebuilds each candidate template instance concretely, and
reports every template whose reconstruction equals the input family exactly.
Overlapping matches are data, not errors: all of them are returned.

The residual families of the two composite templates (sunflower-with-petals
shapes) are extracted by stripping anchors and verified to be maximal
pairwise cross-intersecting via star fixed points over the reduced ground
set. The same sweep machinery also generates every template instance at
canonical anchor positions, which gives the enumeration tests an independent
second code path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .core import (
    Family,
    anchored_family,
    covering_number,
    elements_of,
    full_mask,
    interval_family,
    is_cross_t_intersecting,
    is_maximal_pair,
    is_maximal_t_intersecting,
    is_t_intersecting,
    mask_of,
    _star_masks,
)
from .canon import canonical_form

TUPLE_SWEEP_BUDGET = 4_000_000

TEMPLATE_ORDER = ("T1.2-i", "T1.2-ii", "T1.2-iii", "T1.2-iv")


@dataclass(frozen=True)
class TemplateMatch:
    """Which template(s) a family realizes, with witness parameters."""

    template: str
    witnesses: dict
    all_matches: tuple[tuple[str, dict], ...] = field(default_factory=tuple)

    @property
    def matched(self) -> bool:
        return self.template != "none"


def _no_match() -> TemplateMatch:
    return TemplateMatch("none", {}, ())


# ---------------------------------------------------------------------------
# concrete template instances at arbitrary anchors


def _filter_family(n: int, k: int, pred) -> tuple[int, ...]:
    return tuple(
        sorted(m for m in (mask_of(c) for c in combinations(range(1, n + 1), k)) if pred(m))
    )


def _a_members(n: int, k: int, t: int, M0: int) -> tuple[int, ...]:
    return _filter_family(n, k, lambda f: (f & M0).bit_count() >= t + 1)


def _h_members(n: int, k: int, t: int, Tm: int, Xm: int, Ym: int) -> tuple[int, ...]:
    specials = {Xm | (Tm ^ (1 << (e - 1))) for e in elements_of(Tm)}
    return tuple(
        sorted(
            set(_filter_family(n, k, lambda f: Tm & ~f == 0 and f & Ym != 0)) | specials
        )
    )


def _c1_members(n: int, l: int, t: int, Pm: int, Lm: int) -> tuple[int, ...]:
    specials = {Lm ^ (1 << (e - 1)) for e in elements_of(Pm)}
    return tuple(sorted(set(anchored_family(n, l, Pm).members) | specials))


def _c2_members(n: int, k: int, t: int, Pm: int, Lm: int) -> tuple[int, ...]:
    window = Lm & ~Pm

    def pred(f: int) -> bool:
        if Pm & ~f == 0:
            return True
        return (f & Pm).bit_count() == t and f & window != 0

    return _filter_family(n, k, pred)


def _b_members(n: int, k: int, quad: tuple[int, int, int, int]) -> tuple[int, ...]:
    a1, a2, a3, a4 = quad
    anchors = (mask_of((a1, a2)), mask_of((a2, a3)), mask_of((a3, a4)))
    return _filter_family(n, k, lambda f: any(a & ~f == 0 for a in anchors))


def _iii_members(n: int, k: int, t: int, M: int, residuals: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    mels = elements_of(M)
    out = set(anchored_family(n, k, M).members)
    for i, e in enumerate(mels):
        anchor = M ^ (1 << (e - 1))
        out |= {anchor | a for a in residuals[i]}
    return tuple(sorted(out))


def _iv_members(
    n: int, k: int, t: int, Tm: int, Mm: int, A: tuple[int, ...], B: tuple[int, ...]
) -> tuple[int, ...]:
    out = set(_filter_family(n, k, lambda f: Tm & ~f == 0 and (f & Mm).bit_count() >= t + 1))
    out |= {Tm | a for a in A}
    for e in elements_of(Tm):
        drop = Mm ^ (1 << (e - 1))
        out |= {drop | b for b in B}
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# maximal pairwise cross-intersecting tuples over a reduced universe


def _compat_rows(verts: list[int], other: list[int], t: int) -> list[int]:
    rows = []
    for a in verts:
        row = 0
        for j, b in enumerate(other):
            if (a & b).bit_count() >= t:
                row |= 1 << j
        rows.append(row)
    return rows


def maximal_cross_pairs(
    n: int, universe: int, size1: int, size2: int, t: int = 1, include_empty: bool = True
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All maximal cross-t-intersecting pairs (as member-mask tuples) over the
    subsets of `universe`; the sweep over one side is exhaustive."""
    els = elements_of(universe)
    verts1 = [mask_of(c) for c in combinations(els, size1)]
    verts2 = [mask_of(c) for c in combinations(els, size2)]
    if (1 << len(verts1)) > TUPLE_SWEEP_BUDGET:
        raise ValueError(f"sweep over 2^{len(verts1)} subsets exceeds the budget")
    rows12 = _compat_rows(verts1, verts2, t)
    rows21 = _compat_rows(verts2, verts1, t)
    full1, full2 = (1 << len(verts1)) - 1, (1 << len(verts2)) - 1
    out = []
    for fmask in range(1 << len(verts1)):
        g = full2
        m = fmask
        while m:
            low = m & -m
            g &= rows12[low.bit_length() - 1]
            m ^= low
        f2 = full1
        m = g
        while m:
            low = m & -m
            f2 &= rows21[low.bit_length() - 1]
            m ^= low
        if f2 == fmask and (include_empty or (fmask and g)):
            out.append(
                (
                    tuple(verts1[i] for i in _bits(fmask)),
                    tuple(verts2[j] for j in _bits(g)),
                )
            )
    return out


def maximal_cross_tuples(
    n: int, universe: int, size: int, r: int, t: int = 1
) -> list[tuple[tuple[int, ...], ...]]:
    """All maximal r-tuples of pairwise cross-t-intersecting families of
    `size`-subsets of `universe` (ordered tuples; empty components allowed).
    Fixed points of the round-robin star map, swept over the first r-1
    components, which determine the last."""
    els = elements_of(universe)
    verts = [mask_of(c) for c in combinations(els, size)]
    V = len(verts)
    if (1 << V) ** (r - 1) > TUPLE_SWEEP_BUDGET:
        raise ValueError(f"sweep over 2^{V * (r - 1)} tuples exceeds the budget")
    rows = _compat_rows(verts, verts, t)
    full = (1 << V) - 1
    fold = [full] * (1 << V)
    for s in range(1, 1 << V):
        low = s & -s
        fold[s] = fold[s & (s - 1)] & rows[low.bit_length() - 1]
    out = []
    for combo in product(range(1 << V), repeat=r - 1):
        last = full
        for s in combo:
            last &= fold[s]
        tup = combo + (last,)
        ok = True
        for i in range(r - 1):
            need = full
            for j, s in enumerate(tup):
                if j != i:
                    need &= fold[s]
            if need != tup[i]:
                ok = False
                break
        if ok:
            out.append(tuple(tuple(verts[i] for i in _bits(s)) for s in tup))
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _is_maximal_residual_tuple(n: int, universe: int, size_each: list[int], tup: list[tuple[int, ...]]) -> bool:
    """Star fixed-point test for pairwise cross-intersecting residual tuples
    over a reduced universe (empty components star to the complete family)."""
    for i, members in enumerate(tup):
        others = [m for j, other in enumerate(tup) if j != i for m in other]
        expect = _star_masks(others, n, size_each[i], 1, universe)
        if tuple(sorted(members)) != expect:
            return False
    return True


# ---------------------------------------------------------------------------
# the classifiers


def classify_fact_2_1(F: Family, t: int) -> TemplateMatch:
    """Simplex-or-star decision for maximal t-intersecting (t+1)-uniform
    families, confirmed against the generated template by canonical form."""
    if F.k != t + 1:
        raise ValueError(f"family must be (t+1)-uniform, got k={F.k} t={t}")
    if not is_maximal_t_intersecting(F, t):
        raise ValueError("family is not maximal t-intersecting")
    n = F.n
    degrees = [0] * (n + 1)
    for m in F.members:
        for e in elements_of(m):
            degrees[e] += 1
    if len(F) == t + 2 and max(degrees[1:]) <= t + 1:
        template = interval_family(n, t + 1, 0, full_mask(t + 2))
        if canonical_form(F) == canonical_form(template):
            return TemplateMatch(
                "F2.1-simplex", {"M": elements_of(F.union_mask())}, (("F2.1-simplex", {}),)
            )
    common = F.common_mask()
    if common.bit_count() >= t:
        template = anchored_family(n, t + 1, full_mask(t))
        if canonical_form(F) == canonical_form(template):
            return TemplateMatch("F2.1-star", {"T": elements_of(common)}, (("F2.1-star", {}),))
    return _no_match()


def _match_i(F: Family, t: int, cover_union: int) -> list[tuple[str, dict]]:
    out = []
    for M0els in combinations(elements_of(cover_union), t + 2):
        M0 = mask_of(M0els)
        if _a_members(F.n, F.k, t, M0) == F.members:
            out.append(("T1.2-i", {"M": M0els}))
    return out


def _match_ii(F: Family, t: int, cover_union: int) -> list[tuple[str, dict]]:
    out = []
    uels = elements_of(cover_union)
    for Tels in combinations(uels, t):
        Tm = mask_of(Tels)
        rest = [e for e in uels if not (Tm >> (e - 1)) & 1]
        for Xels in combinations(rest, F.k - t + 1):
            Xm = mask_of(Xels)
            if _h_members(F.n, F.k, t, Tm, Xm, Xm) == F.members:
                out.append(("T1.2-ii", {"T": Tels, "X": Xels}))
    return out


def _match_iii(F: Family, t: int, covers: tuple[int, ...]) -> list[tuple[str, dict]]:
    n, k = F.n, F.k
    out = []
    for M in covers:
        mels = elements_of(M)
        residuals: list[list[int]] = [[] for _ in mels]
        ok = True
        for f in F.members:
            inter = f & M
            if inter == M:
                continue
            if inter.bit_count() != t:
                ok = False
                break
            i = mels.index(elements_of(M & ~inter)[0])
            residuals[i].append(f & ~M)
        if not ok:
            continue
        tup = [tuple(sorted(r)) for r in residuals]
        if sum(1 for r in tup if r) < 2:
            continue
        universe = full_mask(n) & ~M
        if not _is_maximal_residual_tuple(n, universe, [k - t] * len(tup), tup):
            continue
        if _iii_members(n, k, t, M, tuple(tup)) == F.members:
            witness = {"M": mels, "residual_sizes": tuple(len(r) for r in tup)}
            out.append(("T1.2-iii", witness))
    return out


def _match_iv(F: Family, t: int, covers: tuple[int, ...], cover_union: int) -> list[tuple[str, dict]]:
    n, k = F.n, F.k
    cover_set = set(covers)
    out = []
    for Tels in combinations(elements_of(cover_union), t):
        Tm = mask_of(Tels)
        spokes = [
            e for e in elements_of(cover_union & ~Tm) if (Tm | (1 << (e - 1))) in cover_set
        ]
        for m in range(t + 2, k + 1):
            for Mx in combinations(spokes, m - t):
                Mm = Tm | mask_of(Mx)
                A: list[int] = []
                B_by_drop: dict[int, list[int]] = {e: [] for e in Tels}
                ok = True
                for f in F.members:
                    if Tm & ~f == 0:
                        if f & Mm == Tm:
                            A.append(f & ~Mm)
                        elif (f & Mm).bit_count() < t + 1:
                            ok = False
                            break
                    else:
                        inter = f & Mm
                        missing = elements_of(Mm & ~inter)
                        if len(missing) != 1 or missing[0] not in B_by_drop:
                            ok = False
                            break
                        B_by_drop[missing[0]].append(f & ~Mm)
                if not ok:
                    continue
                b_sets = {tuple(sorted(v)) for v in B_by_drop.values()}
                if len(b_sets) != 1:
                    continue
                B = b_sets.pop()
                if not B:
                    continue
                At = tuple(sorted(A))
                universe = full_mask(n) & ~Mm
                if not _is_maximal_residual_tuple(n, universe, [k - t, k - m + 1], [At, B]):
                    continue
                if _iv_members(n, k, t, Tm, Mm, At, B) == F.members:
                    witness = {
                        "T": Tels,
                        "M": elements_of(Mm),
                        "m": m,
                        "A_size": len(At),
                        "B_size": len(B),
                        "A_empty": not At,
                    }
                    out.append(("T1.2-iv", witness))
    return out


def classify_theorem_1_2(F: Family, t: int) -> TemplateMatch:
    """Match a maximal t-intersecting family with covering number t+1 against
    the four structure templates; returns every template that reconstructs
    the family exactly."""
    if not is_t_intersecting(F, t):
        raise ValueError("family is not t-intersecting")
    if not is_maximal_t_intersecting(F, t):
        raise ValueError("family is not maximal")
    cov = covering_number(F, t)
    if cov.tau != t + 1:
        raise ValueError(f"covering number is {cov.tau}, need t+1 = {t + 1}")
    matches: list[tuple[str, dict]] = []
    matches += _match_i(F, t, cov.union)
    matches += _match_ii(F, t, cov.union)
    matches += _match_iii(F, t, cov.covers)
    matches += _match_iv(F, t, cov.covers, cov.union)
    if not matches:
        return _no_match()
    matches.sort(key=lambda m: TEMPLATE_ORDER.index(m[0]))
    return TemplateMatch(matches[0][0], matches[0][1], tuple(matches))


def classify_pair_theorem_1_1(F1: Family, F2: Family, t: int) -> TemplateMatch:
    """Match a maximal cross-t-intersecting pair (covering number t+1 on both
    sides) against the four extremal pair templates, trying both orders."""
    if not is_cross_t_intersecting(F1, F2, t):
        raise ValueError("pair is not cross t-intersecting")
    if not is_maximal_pair(F1, F2, t):
        raise ValueError("pair is not maximal")
    cov1, cov2 = covering_number(F1, t), covering_number(F2, t)
    if cov1.tau != t + 1 or cov2.tau != t + 1:
        raise ValueError("both covering numbers must equal t+1")
    n, k1, k2 = F1.n, F1.k, F2.k
    uu = cov1.union | cov2.union
    matches: list[tuple[str, dict]] = []

    for M0els in combinations(elements_of(uu), t + 2):
        M0 = mask_of(M0els)
        if _a_members(n, k1, t, M0) == F1.members and _a_members(n, k2, t, M0) == F2.members:
            matches.append(("T1.1-AA", {"M": M0els}))

    for Tels in combinations(elements_of(uu), t):
        Tm = mask_of(Tels)
        xs_pool = elements_of(cov1.union & ~Tm)
        ys_pool = elements_of(cov2.union & ~Tm)
        need = 1 if t == 1 else 2
        for Xels in combinations(xs_pool, k1 - t + 1):
            Xm = mask_of(Xels)
            for Yels in combinations(ys_pool, k2 - t + 1):
                Ym = mask_of(Yels)
                if (Xm & Ym).bit_count() < need:
                    continue
                if (
                    _h_members(n, k1, t, Tm, Xm, Ym) == F1.members
                    and _h_members(n, k2, t, Tm, Ym, Xm) == F2.members
                ):
                    matches.append(("T1.1-HH", {"T": Tels, "X": Xels, "Y": Yels}))

    for (ci, cj) in ((0, 1), (1, 0)):
        fam_c1, fam_c2 = (F1, F2)[ci], (F1, F2)[cj]
        cov_c2 = (cov1, cov2)[cj]
        for Pm in cov_c2.covers:
            rest = elements_of(uu & ~Pm)
            for Lx in combinations(rest, fam_c1.k - t):
                Lm = Pm | mask_of(Lx)
                if (
                    _c1_members(n, fam_c1.k, t, Pm, Lm) == fam_c1.members
                    and _c2_members(n, fam_c2.k, t, Pm, Lm) == fam_c2.members
                ):
                    witness = {
                        "P": elements_of(Pm),
                        "L": elements_of(Lm),
                        "order": "(C1,C2)" if ci == 0 else "(C2,C1)",
                    }
                    matches.append(("T1.1-CC", witness))

    if t == 1 and uu.bit_count() == 4:
        for quad in permutations(elements_of(uu)):
            a, b, c, d = quad
            if _b_members(n, k1, (a, c, b, d)) == F1.members and _b_members(
                n, k2, (a, b, c, d)
            ) == F2.members:
                matches.append(("T1.1-BB", {"quad": quad}))

    # dedupe identical (template, witness) entries found via several routes
    seen = set()
    unique = []
    for name, wit in matches:
        key = (name, tuple(sorted((k, str(v)) for k, v in wit.items())))
        if key not in seen:
            seen.add(key)
            unique.append((name, wit))
    if not unique:
        return _no_match()
    return TemplateMatch(unique[0][0], unique[0][1], tuple(unique))


# ---------------------------------------------------------------------------
# template instance generation (the independent path for the two-way check)


def theorem_1_2_instances(n: int, k: int, t: int) -> list[tuple[Family, str, dict]]:
    """Every template instance at canonical anchor positions: the two rigid
    shapes, plus one family per maximal residual tuple for the composite
    shapes (anchor at the lowest indices, residual tuples enumerated
    exhaustively over the reduced universe)."""
    if k < t + 2:
        raise ValueError("templates need k >= t+2")
    out: list[tuple[Family, str, dict]] = []
    out.append((Family(n, k, _a_members(n, k, t, full_mask(t + 2))), "T1.2-i", {"M": tuple(range(1, t + 3))}))
    Tm = full_mask(t)
    Xm = mask_of(range(t + 1, k + 2))
    out.append(
        (
            Family(n, k, _h_members(n, k, t, Tm, Xm, Xm)),
            "T1.2-ii",
            {"T": tuple(range(1, t + 1)), "X": tuple(range(t + 1, k + 2))},
        )
    )
    M = full_mask(t + 1)
    universe = full_mask(n) & ~M
    for tup in maximal_cross_tuples(n, universe, k - t, t + 1):
        if sum(1 for r in tup if r) < 2:
            continue
        fam = Family(n, k, _iii_members(n, k, t, M, tup))
        out.append((fam, "T1.2-iii", {"M": tuple(range(1, t + 2)), "residual_sizes": tuple(len(r) for r in tup)}))
    for m in range(t + 2, k + 1):
        Mm = full_mask(m)
        universe = full_mask(n) & ~Mm
        for A, B in maximal_cross_pairs(n, universe, k - t, k - m + 1):
            if not B:
                continue
            fam = Family(n, k, _iv_members(n, k, t, full_mask(t), Mm, A, B))
            out.append(
                (
                    fam,
                    "T1.2-iv",
                    {"m": m, "A_size": len(A), "B_size": len(B), "A_empty": not A},
                )
            )
    return out
