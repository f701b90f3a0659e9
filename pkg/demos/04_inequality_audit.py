#!/usr/bin/env python3
"""Exact big-integer audit of the size-product inequalities.

Each lemma's displayed comparison is evaluated with exact integers and
rationals at the ground-set sizes where the extremal classification is
proved (the threshold, one past it, and twice it). Strict inequalities are
checked strictly; points outside a lemma's hypotheses are reported as
precondition-unmet rather than silently skipped.
"""

from xfam.formulas import ALL_LEMMAS, audit_lemma, n_threshold

print("=" * 72)
print("Thresholds grow fast: the audit runs where proofs are tightest")
print("=" * 72)
for (k, l, t) in [(2, 2, 1), (3, 4, 1), (4, 4, 2), (8, 8, 3)]:
    print(f"  t={t}, k={k}, l={l}: n >= {n_threshold(k, l, t)}")

print()
print("=" * 72)
print(f"{'lemma':8s} {'checked':>8s} {'unmet':>6s} {'violations':>11s}")
print("-" * 72)
total = 0
for lemma in ALL_LEMMAS:
    rep = audit_lemma(lemma)
    total += rep.checked
    print(f"{lemma:8s} {rep.checked:8d} {len(rep.points) - rep.checked:6d} {rep.violations:11d}")
print("-" * 72)
print(f"{total} exact comparisons, zero violations expected")

print()
print("One audit point in detail (a strict product comparison at n = 259):")
rep = audit_lemma("4.4ii", [(1, 2, 2, 259)])
pt = rep.points[0]
print(f"  params {pt.params}: lhs {pt.lhs} < rhs {pt.rhs} -> {pt.verdict}")

print()
print("Edge worth knowing: the c1*c2 comparisons need uniformity k >= t+2;")
print("at k = t+1 the two sides collapse (9 vs 9 at t=1), so those points")
print("are reported as precondition-unmet, not as violations:")
rep = audit_lemma("4.7i", [(1, 2, 2, 259), (1, 3, 3, n_threshold(3, 3, 1))])
for pt in rep.points:
    print(f"  {pt.params}: {pt.verdict} {pt.note or ''} {pt.lhs} {pt.rhs}".rstrip())
