"""Exit criteria.  Each test carries an ``acceptance`` marker; the terminal
summary prints one PASS/FAIL line per criterion.  All comparisons are exact.
"""

import random
from fractions import Fraction
from itertools import combinations_with_replacement, product

import pytest

from measure_lattice import (
    INF,
    ZERO,
    ExtNonneg,
    ExtSigned,
    Measure,
    MeasureFamily,
    SignedMeasure,
    UndefinedDifference,
    dirac,
    enumerate_sets,
    ext_sum,
    hahn_decompose,
    index_partition_formula,
    infinity_measure,
    inf_over_subsets,
    join2,
    join_family,
    join_via_jordan,
    jordan_decompose,
    leq,
    meet2,
    meet_family,
    meet_via_jordan,
    oracle_family_bounds,
    oracle_is_glb,
    oracle_is_lub,
    oracle_join2,
    oracle_meet2,
    sub_measures,
    sup_over_subsets,
    zero_measure,
)
from measure_lattice.cli import main

from conftest import FIXTURES, space_of

SEED = 20261017


def rand_weight(rng, inf_prob=0.1):
    if rng.random() < inf_prob:
        return INF
    return ExtNonneg(Fraction(rng.randint(0, 20), rng.randint(1, 6)))


def rand_measure(rng, space, inf_prob=0.1):
    return Measure(space, [rand_weight(rng, inf_prob) for _ in range(space.n)])


def grid_measures(space, values):
    return [Measure(space, w) for w in product(values, repeat=space.n)]


@pytest.mark.acceptance("1. Dirac min/max tables rejected: 0 + 0 != 1 and 1 + 1 != 1 (< 1 s)")
def test_c1_dirac_tables_rejected(capsys, stopwatch):
    ws = str(FIXTURES / "example1.json")
    assert main(["check", ws, str(FIXTURES / "example1_min_table.json")]) == 1
    assert capsys.readouterr().out == "FAIL: witness a|b: 0 + 0 != 1\n"
    assert main(["check", ws, str(FIXTURES / "example1_max_table.json")]) == 1
    assert capsys.readouterr().out == "FAIL: witness a|b: 1 + 1 != 1\n"
    assert stopwatch() < 1.0


@pytest.mark.acceptance("2. meet2(delta_a, delta_b) is zero by fast path and by oracle")
def test_c2_dirac_meet():
    X = space_of(2)
    da, db = dirac(X, 0), dirac(X, 1)
    assert meet2(da, db) == zero_measure(X)
    for a in enumerate_sets(X):
        assert meet2(da, db)(a) == ZERO
        assert oracle_meet2(da, db, a).value == ZERO


@pytest.mark.acceptance("3. Binary meet/join match the inf/sup oracle (n <= 4, grid {0,1/2,1,3,inf}, < 60 s)")
def test_c3_binary_certification(stopwatch):
    values = [ExtNonneg(0), ExtNonneg(Fraction(1, 2)), ExtNonneg(1), ExtNonneg(3), INF]
    pairs = 0
    # exhaustive over ordered pairs for n <= 3
    for n in range(4):
        sp = space_of(n)
        ms = grid_measures(sp, values)
        sets = list(enumerate_sets(sp))
        for m, k in product(ms, repeat=2):
            lo, hi = meet2(m, k), join2(m, k)
            for a in sets:
                assert lo(a) == oracle_meet2(m, k, a).value, (m, k, a)
                assert hi(a) == oracle_join2(m, k, a).value, (m, k, a)
            pairs += 1
    # n = 4: 10,000 pairs sampled from the same grid
    rng = random.Random(SEED)
    sp = space_of(4)
    sets = list(enumerate_sets(sp))
    for _ in range(10_000):
        m = Measure(sp, [rng.choice(values) for _ in range(4)])
        k = Measure(sp, [rng.choice(values) for _ in range(4)])
        lo, hi = meet2(m, k), join2(m, k)
        for a in sets:
            assert lo(a) == oracle_meet2(m, k, a).value, (m, k, a)
            assert hi(a) == oracle_join2(m, k, a).value, (m, k, a)
        pairs += 1
    assert pairs >= 10_000
    assert stopwatch() < 60


def _family_grid():
    """Every family of 1-3 measures (as multisets) on n <= 3 atoms, weights {0,1,2,inf}."""
    values = [ExtNonneg(0), ExtNonneg(1), ExtNonneg(2), INF]
    for n in range(4):
        sp = space_of(n)
        ms = grid_measures(sp, values)
        for size in (1, 2, 3):
            for combo in combinations_with_replacement(ms, size):
                yield MeasureFamily(list(combo))


def _random_families(count):
    rng = random.Random(SEED + 4)
    for _ in range(count):
        sp = space_of(rng.randint(1, 4))
        yield MeasureFamily([rand_measure(rng, sp) for _ in range(rng.randint(1, 3))])


@pytest.mark.acceptance("4. Family meet/join match the partition-assignment oracle (exhaustive n <= 3 + 1,000 random, < 120 s)")
def test_c4_family_certification(stopwatch):
    count = 0
    for source in (_family_grid(), _random_families(1000)):
        for f in source:
            lo, hi = meet_family(f), join_family(f)
            for a in enumerate_sets(f.space):
                b = oracle_family_bounds(f, a)
                assert lo(a) == b.meet.value, (f, a)
                assert hi(a) == b.join.value, (f, a)
            count += 1
    assert count > 1000
    assert stopwatch() < 120


@pytest.mark.acceptance("5. Complete-lattice laws + universal glb/lub (>= 5,000 instances, < 60 s)")
def test_c5_lattice_laws(stopwatch):
    rng = random.Random(SEED + 5)
    glb_checks = 0
    for i in range(5000):
        sp = space_of(rng.randint(0, 4))
        a, b, c = (rand_measure(rng, sp) for _ in range(3))
        assert meet2(a, b) == meet2(b, a) and join2(a, b) == join2(b, a)
        assert meet2(meet2(a, b), c) == meet2(a, meet2(b, c))
        assert join2(join2(a, b), c) == join2(a, join2(b, c))
        assert meet2(a, a) == a == join2(a, a)
        assert meet2(a, join2(a, b)) == a and join2(a, meet2(a, b)) == a
        assert meet_family([a, b, c]) == meet2(meet2(a, b), c)
        assert join_family([a, b, c]) == join2(join2(a, b), c)

        lo, hi = meet_family([a, b, c]), join_family([a, b, c])
        assert all(leq(lo, m) and leq(m, hi) for m in (a, b, c))
        # a random common lower bound / upper bound must sit below / above
        floor = [min(ws) for ws in zip(a.weights, b.weights, c.weights)]
        rho = Measure(sp, [w if w.is_inf and rng.random() < 0.5 else
                           (ExtNonneg(rng.randint(0, 50)) if w.is_inf else ExtNonneg(w.value * Fraction(rng.randint(0, 4), 4)))
                           for w in floor])
        assert leq(rho, a) and leq(rho, b) and leq(rho, c)
        assert leq(rho, lo)
        ceil = [max(ws) for ws in zip(a.weights, b.weights, c.weights)]
        up = Measure(sp, [w if w.is_inf else ExtNonneg(w.value + rng.randint(0, 3)) for w in ceil])
        assert leq(hi, up)

        if i % 25 == 0:
            fam = MeasureFamily([a, b, c])
            assert oracle_is_glb(lo, fam, 1000, seed=i)
            assert oracle_is_lub(hi, fam, 1000, seed=i)
            glb_checks += 1
    assert glb_checks == 200
    assert stopwatch() < 60


@pytest.mark.acceptance("6. Jordan route equals meet2/join2 (>= 5,000 finite pairs; inf atom -> UndefinedDifference)")
def test_c6_jordan_route():
    rng = random.Random(SEED + 6)
    for _ in range(5000):
        sp = space_of(rng.randint(0, 4))
        m = rand_measure(rng, sp, inf_prob=0.0)
        n = rand_measure(rng, sp)
        assert meet_via_jordan(m, n) == meet2(m, n)
        assert join_via_jordan(m, n) == join2(m, n)
    for _ in range(1000):
        sp = space_of(rng.randint(1, 4))
        m = rand_measure(rng, sp)
        m = Measure(sp, [INF if i == rng.randrange(sp.n) else w for i, w in enumerate(m.weights)])
        if m.is_finite():
            continue
        n = rand_measure(rng, sp)
        with pytest.raises(UndefinedDifference):
            sub_measures(n, m)
        with pytest.raises(UndefinedDifference):
            meet_via_jordan(m, n)
        with pytest.raises(UndefinedDifference):
            join_via_jordan(m, n)


@pytest.mark.acceptance("7. Jordan/Hahn suite (exhaustive n <= 4 over a 5-value signed grid)")
def test_c7_jordan_hahn():
    values = [ExtSigned(-2), ExtSigned(Fraction(-1, 2)), ExtSigned(0), ExtSigned(1), ExtSigned.inf()]
    for n in range(5):
        sp = space_of(n)
        sets = list(enumerate_sets(sp))
        for w in product(values, repeat=n):
            s = SignedMeasure(sp, w)
            j = jordan_decompose(s)
            h = hahn_decompose(s)
            assert sub_measures(j.positive, j.negative) == s
            assert j.positive(h.negative_set) == ZERO and j.negative(h.positive_set) == ZERO
            for p, q in zip(j.positive.weights, j.negative.weights):
                assert p == ZERO or q == ZERO
            for a in sets:
                assert sup_over_subsets(s, a) == j.positive(a)
                assert -inf_over_subsets(s, a) == j.negative(a)


@pytest.mark.acceptance("8. Index-partition formula equals meet_family on the criterion-4 grid")
def test_c8_index_partition_coincidence():
    for source in (_family_grid(), _random_families(1000)):
        for f in source:
            lo = meet_family(f)
            for a in enumerate_sets(f.space):
                assert index_partition_formula(f, a) == lo(a), (f, a)
    assert (FIXTURES / "example2_note.md").is_file()


@pytest.mark.acceptance("9. Order extremes on 10,000 random measures; infinity measure of empty set is 0")
def test_c9_extremes():
    rng = random.Random(SEED + 9)
    for _ in range(10_000):
        sp = space_of(rng.randint(0, 5))
        m = rand_measure(rng, sp, inf_prob=0.2)
        assert leq(zero_measure(sp), m) and leq(m, infinity_measure(sp))
    for n in range(5):
        sp = space_of(n)
        assert infinity_measure(sp)(sp.empty()) == ZERO
        for a in enumerate_sets(sp):
            if not a.is_empty():
                assert infinity_measure(sp)(a) == INF


@pytest.mark.acceptance("10. Double sums with inf entries: row-major = column-major (1,000 grids)")
def test_c10_double_sum():
    rng = random.Random(SEED + 10)
    with_inf = 0
    for _ in range(1000):
        rows, cols = rng.randint(0, 6), rng.randint(0, 6)
        grid = [[rand_weight(rng, inf_prob=0.05) for _ in range(cols)] for _ in range(rows)]
        by_rows = ext_sum(ext_sum(r) for r in grid)
        by_cols = ext_sum(ext_sum(grid[i][j] for i in range(rows)) for j in range(cols))
        assert by_rows == by_cols
        with_inf += by_rows.is_inf
    assert with_inf > 0
