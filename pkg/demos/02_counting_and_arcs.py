"""Counting epiclasses with non-crossing arc diagrams.

For the uniform families the epiclasses of universal localisations are in
bijection with non-crossing arc/loop configurations on n points, with arc
lengths capped by min(n-1, h-1).  Once h reaches n the counts stabilise:
central binomial coefficients on the circle, Catalan numbers on the line.
"""
from math import comb

from nakloc import (
    build_cycle,
    count_noncrossing,
    enumerate_arc_diagrams,
    enumerate_uniloc,
)

print("circle counts (stabilising at C(2n, n)):")
for n in range(2, 6):
    row = [count_noncrossing("circle", n, h) for h in range(2, n + 2)]
    print(f"  n={n}: h=2..{n + 1} -> {row}   C(2n,n) = {comb(2 * n, n)}")

print("\nline counts (stabilising at the Catalan number C_{n+1}):")
for n in range(2, 6):
    row = [count_noncrossing("line", n, h) for h in range(2, n + 2)]
    print(f"  n={n}: h=2..{n + 1} -> {row}")

print("\nevery diagram is the deformed minimal trivial set of one epiclass;")
A = build_cycle(4, 4)
print(f"on the 4-cycle with Loewy length 4 there are {len(enumerate_uniloc(A))} epiclasses,")
print("for instance these multi-arc ones:")
with_arcs = [d for d in enumerate_arc_diagrams("circle", 4, 4) if len(d.arcs) >= 2]
for diagram in with_arcs[:4]:
    print("\n" + diagram.as_ascii())
