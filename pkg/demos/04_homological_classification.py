"""Which epiclasses are homological, classified vs. tested.

Over a self-injective cyclic algebra the homological ring epimorphisms
admit a closed-form classification: besides identity and zero there are
the semisimple ones (orthogonal collections of projectives, present only
when the Loewy length is at most the rank) and a periodic family governed
by gcd(rank, Loewy length).  The generic tester decides Ext-agreement in
all degrees from syzygy periodicity; the two must coincide.
"""
from nakloc import (
    build_cycle,
    classify_homological_selfinjective,
    enumerate_uniloc,
    module_label,
)

for n, h in [(2, 2), (3, 3), (6, 3), (4, 6), (2, 5)]:
    A = build_cycle(n, h)
    classified = classify_homological_selfinjective(A)
    generic = [loc for loc in enumerate_uniloc(A) if loc.homological]
    agree = {l.xcat for l in classified} == {l.xcat for l in generic}
    print(
        f"cycle n={n} h={h}: {len(generic)} homological epiclasses "
        f"out of {len(enumerate_uniloc(A))}   (classification agrees: {agree})"
    )

print("\nthe first non-trivial non-semisimple case, the 6-cycle at Loewy length 3:")
A = build_cycle(6, 3)
for loc in classify_homological_selfinjective(A):
    if loc.xcat and not loc.semisimple and len(loc.trivial) == 2:
        names = ",".join(module_label(A, x) for x in sorted(loc.trivial))
        print(f"  localise at {{{names}}}  ->  B = {loc.algebra.as_text()}")
