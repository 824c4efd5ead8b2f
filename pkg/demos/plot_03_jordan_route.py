"""
Meets through the Jordan decomposition
======================================

When ``mu`` is finite, ``nu - mu`` is a signed measure and its positive and
negative parts give the join and the meet directly.
"""

from measure_lattice import (
    MeasurableSpace,
    Measure,
    UndefinedDifference,
    hahn_decompose,
    jordan_decompose,
    join2,
    join_via_jordan,
    meet2,
    meet_via_jordan,
    sub_measures,
    sup_over_subsets,
)

X = MeasurableSpace(["a", "b", "c"])
mu = Measure(X, [1, 5, 2])
nu = Measure(X, [3, 2, "inf"])

diff = sub_measures(nu, mu)
parts = jordan_decompose(diff)
hahn = hahn_decompose(diff)
print("nu - mu   :", diff)
print("positive  :", parts.positive)
print("negative  :", parts.negative)
print("Hahn sets :", hahn.positive_set, hahn.negative_set)

# %%
# The positive part on a set is the largest value of the signed measure on
# any subset.
print("sup over subsets of X:", sup_over_subsets(diff, X.whole()), "=", parts.positive(X.whole()))

# %%
print("meet via Jordan:", meet_via_jordan(mu, nu), "| meet2:", meet2(mu, nu))
print("join via Jordan:", join_via_jordan(mu, nu), "| join2:", join2(mu, nu))

# %%
# With an infinite atom in the first argument the difference is undefined.
try:
    meet_via_jordan(nu, mu)
except UndefinedDifference as exc:
    print("undefined:", exc)
