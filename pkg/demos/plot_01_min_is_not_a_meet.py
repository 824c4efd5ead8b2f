"""
Pointwise min and max of measures
=================================

Two Dirac measures on a two-point space.  Taking the min (or max) set by set
does not give a measure, but the lattice meet (or join) does.
"""

from measure_lattice import (
    MeasurableSpace,
    SetFunctionTable,
    dirac,
    enumerate_sets,
    is_measure,
    join2,
    meet2,
    oracle_join2,
    oracle_meet2,
)

X = MeasurableSpace(["a", "b"])
mu, nu = dirac(X, "a"), dirac(X, "b")

for s in enumerate_sets(X):
    print(f"{s!r:8} mu={mu(s)}  nu={nu(s)}")

# %%
# Set-by-set min and max break additivity on {a, b}.
for name, table in [("min", SetFunctionTable.pointwise_min(mu, nu)),
                    ("max", SetFunctionTable.pointwise_max(mu, nu))]:
    report = is_measure(table)
    print(f"pointwise {name}: measure={report.ok}, at {report.witness!r}: {report.describe()}")

# %%
# The meet is found by splitting each set between the two measures as
# cheaply as possible.  The oracle scans every split B and reports the best.
whole = X.whole()
r = oracle_meet2(mu, nu, whole)
print("meet:", meet2(mu, nu), "| oracle on X:", r.value, "best B =", r.witness)
r = oracle_join2(mu, nu, whole)
print("join:", join2(mu, nu), "| oracle on X:", r.value, "best B =", r.witness)
