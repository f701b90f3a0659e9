#!/usr/bin/env python3
"""Every explicit extremal family, checked against its closed-form size and
its partner: cross-intersection, covering number t+1, and (measured) closure
fixed-point status.
"""

from xfam import (
    construct_A,
    construct_B,
    construct_C1,
    construct_C2,
    construct_D,
    construct_H,
    construction_pair,
    covering_number,
    elements_of,
    is_cross_t_intersecting,
    verify_construction,
)
from xfam.formulas import binom, eval_a, eval_c1, eval_c2, eval_h

print("=" * 64)
print("The six generators (anchored at the low indices by default)")
print("=" * 64)

a = construct_A(7, 3, 1)
print(f"A(k=3, t=1) @ n=7: everything meeting [3] twice; size {len(a)} = a(3,1) = {eval_a(3, 1, 7)}")

b = construct_B(7, 3, (1, 2, 3, 4))
print(f"B(k=3) @ n=7: three 2-anchored intervals along 1-2-3-4; size {len(b)} = a(3,1) = {eval_a(3, 1, 7)}")

c1 = construct_C1(7, 3, 1)
c2 = construct_C2(7, 3, 1, 3)
print(f"C1(l=3, t=1) @ n=7: size {len(c1)} = c1(3,1) = {eval_c1(3, 1, 7)}")
print(f"C2(k=3, t=1; l=3) @ n=7: size {len(c2)} = c2(3,3,1) = {eval_c2(3, 3, 1, 7)}")

h = construct_H(7, 3, 1, (2, 3, 4), (2, 3, 4))
print(f"H(k=3, t=1; X=Y=[2,4]) @ n=7: size {len(h)} = h(3,3,1) = {eval_h(3, 3, 1, 7)}")

d = construct_D(8, 4, 2, (1,), (2, 3, 4, 5))
expect = eval_a(4, 2, 8) - 1 * binom(3, 1)
print(f"D(k=4, t=2) @ n=8: the three-cover family; size {len(d)} = a(4,2) - C(3,1) = {expect}")
cov = covering_number(d, 2)
print(f"  its minimum 2-covers: {[elements_of(c) for c in cov.covers]}")

print()
print("=" * 64)
print("Cross-intersecting pairs and the full verification report")
print("=" * 64)

for kind, (n, k, l, t) in [("AA", (8, 3, 3, 1)), ("BB", (8, 3, 4, 1)), ("CC", (8, 3, 4, 1)), ("HH", (8, 3, 4, 1))]:
    spec, partner = construction_pair(kind, n, k, l, t)
    rep = verify_construction(spec, partner)
    flags = " ".join(f"{name}={'ok' if v else 'FAIL'}" for name, v in rep["checks"].items())
    print(f"{kind} @ (n={n}, k={k}, l={l}, t={t}): {flags} maximal={rep['maximal_measured']}")

print()
print("The two three-interval families pair up after swapping the middle anchors:")
b1 = construct_B(8, 3, (1, 3, 2, 4))
b2 = construct_B(8, 4, (1, 2, 3, 4))
print(f"  cross-1-intersecting: {is_cross_t_intersecting(b1, b2, 1)}")
