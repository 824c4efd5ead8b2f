"""
Meets and joins of families
===========================

For a family, the meet hands each piece of a partition of X to one family
member.  The brute-force oracle scans every partition and every assignment.
"""

from fractions import Fraction

from measure_lattice import (
    MeasurableSpace,
    Measure,
    MeasureFamily,
    enumerate_sets,
    index_partition_formula,
    join_family,
    meet_family,
    oracle_family_meet,
    oracle_is_glb,
    scale,
)

X = MeasurableSpace(["a", "b"])
family = MeasureFamily({"m1": Measure(X, [1, 5]), "m2": Measure(X, [3, 2])})

lo, hi = meet_family(family), join_family(family)
print("meet:", lo)
print("join:", hi)

# %%
# The witness shows which block went to which member.
for s in enumerate_sets(X):
    r = oracle_family_meet(family, s)
    print(f"{s!r:8} meet={lo(s)} oracle={r.value} via {r.witness}")

# %%
# Random common lower bounds never rise above the meet.
print("meet is the greatest lower bound:", bool(oracle_is_glb(lo, family, 1000, seed=1)))

# %%
# Indexing the partition by the family itself gives the same answer on any
# finite family.  A finite version of the scaled-measure family shows it:
# the floor 4 * base survives.
base = Measure(X, [Fraction(1, 2), Fraction(1, 2)])
scaled = [scale(alpha, base) for alpha in (4, Fraction(9, 2), 5)]
print("meet of scaled family:", meet_family(scaled))
print("index-partition value on X:", index_partition_formula(scaled, X.whole()))
