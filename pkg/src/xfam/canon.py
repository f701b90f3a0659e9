"""Canonical forms for families under relabeling of the ground set.

Two families (or tuples of families, relabeled simultaneously) are isomorphic
iff their canonical byte strings are equal. The canonicalizer runs the usual
individualization-refinement search: elements are partitioned by iterated
degree refinement (signature = own color plus the multiset of color profiles
of the members through the element), the first non-singleton cell is split on
each of its elements in turn, and the minimum leaf encoding wins. Cell order
is derived from signature values only, never from element indices, so the
result is invariant under every permutation of [n].

Leaves with equal encodings certify automorphisms; their orbits prune sibling
branches, which collapses the factorial stalls of highly symmetric families
(anchored stars, near-complete families) to a handful of descents.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .core import Family, elements_of

Cells = tuple[tuple[int, ...], ...]


def _refine(cells: Cells, fam_members: Sequence[tuple[int, ...]], elem_members: Sequence[list[list[int]]], n: int) -> Cells:
    while True:
        color = [0] * n
        for ci, cell in enumerate(cells):
            for e in cell:
                color[e] = ci
        sigs: dict[int, tuple] = {}
        # profile of a member = sorted colors of its elements
        profiles = []
        for fi, members in enumerate(fam_members):
            profiles.append([tuple(sorted(color[e] for e in mem)) for mem in members])
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                continue
            for e in cell:
                sig = tuple(
                    tuple(sorted(profiles[fi][mi] for mi in elem_members[fi][e]))
                    for fi in range(len(fam_members))
                )
                sigs[e] = sig
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for e in cell:
                groups.setdefault(sigs[e], []).append(e)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for sig in sorted(groups):
                new_cells.append(tuple(groups[sig]))
        cells = tuple(new_cells)
        if not changed:
            return cells


class _Canonicalizer:
    def __init__(self, n: int, families: Sequence[tuple[int, ...]]):
        self.n = n
        # members as element-index tuples (0-based) for refinement speed
        self.fam_members = [
            [tuple(e - 1 for e in elements_of(m)) for m in fam] for fam in families
        ]
        self.elem_members: list[list[list[int]]] = []
        for members in self.fam_members:
            by_elem: list[list[int]] = [[] for _ in range(n)]
            for mi, mem in enumerate(members):
                for e in mem:
                    by_elem[e].append(mi)
            self.elem_members.append(by_elem)
        self.best: bytes | None = None
        self.best_pos: list[int] | None = None
        self.autos: list[tuple[int, ...]] = []

    def run(self) -> bytes:
        self._search(tuple((tuple(range(self.n)),)), [])
        assert self.best is not None
        return self.best

    def _encode(self, pos: list[int]) -> bytes:
        chunks = []
        for members in self.fam_members:
            masks = sorted(sum(1 << pos[e] for e in mem) for mem in members)
            chunks.append(b"".join(m.to_bytes(8, "big") for m in masks))
        return b"|".join(chunks)

    def _leaf(self, cells: Cells) -> None:
        pos = [0] * self.n
        for i, cell in enumerate(cells):
            pos[cell[0]] = i
        enc = self._encode(pos)
        if self.best is None or enc < self.best:
            self.best = enc
            self.best_pos = pos
        elif enc == self.best:
            inv_best = [0] * self.n
            for e, p in enumerate(self.best_pos):  # type: ignore[arg-type]
                inv_best[p] = e
            alpha = tuple(inv_best[pos[e]] for e in range(self.n))
            if any(alpha[e] != e for e in range(self.n)) and alpha not in self.autos:
                self.autos.append(alpha)

    def _search(self, cells: Cells, fixed: list[int]) -> None:
        cells = _refine(cells, self.fam_members, self.elem_members, self.n)
        target = None
        for ci, cell in enumerate(cells):
            if len(cell) > 1:
                target = ci
                break
        if target is None:
            self._leaf(cells)
            return
        cell = cells[target]
        # orbit pruning: skip elements reachable from an already-explored
        # branch by an automorphism fixing the individualized prefix
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def refresh_orbits() -> None:
            for g in self.autos:
                if all(g[f] == f for f in fixed):
                    for e in range(self.n):
                        ra, rb = find(e), find(g[e])
                        if ra != rb:
                            parent[ra] = rb

        done: list[int] = []
        for e in cell:
            refresh_orbits()
            if any(find(e) == find(d) for d in done):
                continue
            rest = tuple(x for x in cell if x != e)
            child = cells[:target] + ((e,), rest) + cells[target + 1 :]
            self._search(child, fixed + [e])
            done.append(e)


def _header(n: int, families: Sequence[Family]) -> bytes:
    parts = [f"n={n}"] + [f"k={f.k},m={len(f.members)}" for f in families]
    return (";".join(parts) + ":").encode()


def canonical_form_tuple(families: Sequence[Family], n: int | None = None) -> bytes:
    """Relabeling-invariant encoding of an ordered tuple of families over a
    common ground set (one permutation applied to all of them)."""
    if not families:
        raise ValueError("need at least one family")
    if n is None:
        n = families[0].n
    if any(f.n != n for f in families):
        raise ValueError("families live over different ground sets")
    head = _header(n, families)
    if all(len(f.members) in (0, comb(n, f.k)) for f in families):
        # empty and complete families are fixed by every permutation
        pos = list(range(n))
        engine = _Canonicalizer(n, [f.members for f in families])
        return head + engine._encode(pos)
    engine = _Canonicalizer(n, [f.members for f in families])
    return head + engine.run()


def canonical_form(family: Family) -> bytes:
    """Canonical byte string: equal for two families iff some permutation of
    [n] maps one onto the other."""
    return canonical_form_tuple([family], family.n)


def are_isomorphic(F: Family, G: Family) -> bool:
    if F.n != G.n or F.k != G.k or len(F.members) != len(G.members):
        return False
    return canonical_form(F) == canonical_form(G)


def are_isomorphic_pairs(pair1: tuple[Family, Family], pair2: tuple[Family, Family]) -> bool:
    a1, b1 = pair1
    a2, b2 = pair2
    if a1.n != a2.n:
        return False
    return canonical_form_tuple([a1, b1]) == canonical_form_tuple([a2, b2])
