"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v -s`` or
``python3 tests/test_acceptance.py``.
"""

import random
import statistics
import sys
import time
from itertools import permutations

import pytest

from shelflist import (
    BetweennessInstance,
    Buyer,
    Catalog,
    Instance,
    LinearPreference,
    Money,
    Rule,
    choose,
    choose_successive,
    evaluate_list,
    solve_exact,
    solve_pa_sc_singleton,
    solve_rc,
    solve_sepa_sat,
    solve_sepa_sc_small_tc,
    top_cycle,
)
from shelflist.generate import RandomSpec, gen_random, planted_cycle_tournament, random_betweenness, random_tournament
from shelflist.reductions import (
    REDUCTIONS,
    _table_orderings,
    derive_gadgets,
    embed_order,
    gadget_instance,
    reduce_to_pa_sat,
    reduce_to_sepa_sc,
    solve_betweenness_exhaustive,
    verify_gadget_tables,
    verify_reduction_equivalence,
)

from helpers import L, R, instance_of


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail

    return emit


def test_criterion_1_three_cycle_position_rule(report):
    rng = random.Random(101)
    start = time.perf_counter()
    failures = 0
    for _ in range(1000):
        n = rng.randint(3, 10)
        t = planted_cycle_tournament(rng, n, tail_random=True)
        tc = top_cycle(t)
        order = rng.sample(range(n), n)
        members = [p for p in order if p in tc]
        if len(tc) != 3 or choose_successive(order, t, L) != members[-1] or choose_successive(order, t, R) != members[0]:
            failures += 1
    elapsed = time.perf_counter() - start
    report(1, failures == 0 and elapsed < 1.0, f"1000 trials, {failures} failures, {elapsed:.3f} s < 1 s")


def test_criterion_2_successive_lands_in_top_cycle(report):
    rng = random.Random(102)
    failures = 0
    for _ in range(1000):
        n = rng.randint(1, 10)
        t = random_tournament(rng, n)
        order = rng.sample(range(n), n)
        if choose_successive(order, t, rng.choice([L, R])) not in top_cycle(t):
            failures += 1
    report(2, failures == 0, f"1000 triples, {failures} failures")


def test_criterion_3_profit_increasing_swaps(report):
    rng = random.Random(103)
    failures = swaps = 0
    for _ in range(1000):
        n = rng.randint(2, 8)
        inst = instance_of(Rule.SAT, n, rng.randint(1, 6), rng)
        micros = inst.catalog.micros
        order = rng.sample(range(n), n)
        base = evaluate_list(inst, order)
        for x in range(1, n):
            if micros[order[x]] > micros[order[x - 1]]:
                swapped = order[:]
                swapped[x - 1], swapped[x] = swapped[x], swapped[x - 1]
                swaps += 1
                failures += evaluate_list(inst, swapped) < base
    report(3, failures == 0, f"1000 instances, {swaps} swaps, {failures} decreases")


POLY = [
    ("solve_rc", solve_rc, dict(rule=Rule.RC, direction="mixed")),
    ("solve_sepa_sat", solve_sepa_sat, dict(rule=Rule.SAT, direction="L")),
    ("solve_pa_sc_singleton", solve_pa_sc_singleton, dict(rule=Rule.SC, direction="mixed", tc_size=1)),
    ("solve_sepa_sc_small_tc", solve_sepa_sc_small_tc, dict(rule=Rule.SC, direction="L", tc_size="1or3")),
]


def test_criterion_4_poly_solvers_match_exact(report):
    start = time.perf_counter()
    summary = []
    failures = 0
    for seed, (name, solver, kwargs) in enumerate(POLY):
        rng = random.Random(400 + seed)
        bad = 0
        for _ in range(500):
            inst = instance_of(n=rng.randint(1, 7), m=rng.randint(0, 6), rng=rng, **kwargs)
            sol = solver(inst)
            if sol.best_value != solve_exact(inst).best_value or evaluate_list(inst, sol.witness) != sol.best_value:
                bad += 1
        failures += bad
        summary.append(f"{name} {bad}/500")
    elapsed = time.perf_counter() - start
    report(4, failures == 0 and elapsed < 120, f"{', '.join(summary)} mismatches, {elapsed:.1f} s < 120 s")


def test_criterion_5_gadget_reconstruction(report):
    lib = derive_gadgets()
    found = all(role.candidates >= 1 for role in lib.roles)
    coverage = all(
        sorted(order for order, _ in _table_orderings(rows)) == sorted(permutations(sorted({*rows[0][:4]})))
        for rows in lib.tables.values()
    )
    mismatches = verify_gadget_tables(lib)
    ok = found and coverage and not mismatches and len(lib.roles) == 8
    detail = (f"{len(lib.roles)} roles, candidates {[r.candidates for r in lib.roles]}, "
              f"24 orderings per table: {coverage}, mismatches {len(mismatches)}")
    report(5, ok, detail)


def test_criterion_6_gadget_constants(report):
    lib = derive_gadgets()
    maxima = {}
    for kind in ("C", "D"):
        inst = gadget_instance(kind, lib)
        maxima[kind] = max(evaluate_list(inst, order) for order in permutations(range(inst.n)))

    source = BetweennessInstance(("u1", "u2"), ("v1",), "w", (("u1", "v1", "u2"),), (("v1", "u1"),))
    order = solve_betweenness_exhaustive(source).order
    reduced = reduce_to_pa_sat(source)
    shelf = embed_order(source, order, reduced)
    micros = reduced.catalog.micros
    per_tuple = [
        Money(micros[choose(reduced.buyers[k], shelf)] + micros[choose(reduced.buyers[k + 1], shelf)])
        for k in range(0, reduced.m, 2)
    ]
    ok = maxima == {"C": Money.of(129), "D": Money.of(464)} and per_tuple == [Money.of(4), Money.of(3)]
    detail = f"C max {maxima['C']}, D max {maxima['D']}, pa-sat per tuple {[str(v) for v in per_tuple]}"
    report(6, ok, detail)


def test_criterion_7_reduction_sweep(report):
    rng = random.Random(107)
    lib = derive_gadgets()
    start = time.perf_counter()
    discrepancies = satisfiable = 0
    for _ in range(200):
        source = random_betweenness(rng, max_u=3, max_v=2, max_c=2, max_d=2)
        results = [verify_reduction_equivalence(source, target, lib=lib) for target in REDUCTIONS]
        discrepancies += sum(not r.equivalent for r in results)
        satisfiable += results[0].betweenness.satisfiable
    elapsed = time.perf_counter() - start
    detail = (f"200 instances x 3 reductions, {satisfiable} satisfiable, {200 - satisfiable} not, "
              f"{discrepancies} discrepancies, {elapsed:.1f} s < 300 s")
    report(7, discrepancies == 0 and elapsed < 300, detail)


def test_criterion_8_performance(report):
    sat = gen_random(RandomSpec(10_000, 1_000, "sat", "L", tc_size=1, profit_max=10**6, seed=8))
    start = time.perf_counter()
    solve_sepa_sat(sat)
    t_sat = time.perf_counter() - start

    n = 20
    rng = random.Random(108)
    prefs = [LinearPreference(tuple(rng.sample(range(n), n))) for _ in range(50)]
    buyers = tuple(Buyer(f"b{k}", Rule.RC, L, prefs[k % len(prefs)]) for k in range(10**6))
    rc = Instance(Catalog(tuple(f"p{i}" for i in range(n)), tuple(Money.of(i) for i in range(n))), buyers)
    start = time.perf_counter()
    solve_rc(rc)
    t_rc = time.perf_counter() - start
    report(8, t_sat < 5 and t_rc < 1, f"sepa-sat n=10000 m=1000 {t_sat:.2f} s < 5 s, rc m=10^6 {t_rc:.2f} s < 1 s")


def _reduced_with_n(n, rng):
    """A reduced sepa-sc instance with exactly n products (|U| + |V| = n - 3)."""
    size = n - 3
    nu = max(2, size - size // 3)
    U = tuple(f"u{i + 1}" for i in range(nu))
    V = tuple(f"v{i + 1}" for i in range(size - nu))
    ui, uk = rng.sample(U, 2)
    C = ((ui, rng.choice(V), uk),)
    D = ((rng.choice(V), rng.choice(U)),)
    inst = reduce_to_sepa_sc(BetweennessInstance(U, V, "w", C, D))
    assert inst.n == n
    return inst


def test_criterion_9_factorial_trend(report):
    rng = random.Random(109)
    medians, explored = {}, {}
    for n in range(6, 11):
        inst = _reduced_with_n(n, rng)
        times = []
        for _ in range(3 if n < 10 else 1):
            start = time.perf_counter()
            sol = solve_exact(inst)
            times.append(time.perf_counter() - start)
        medians[n], explored[n] = statistics.median(times), sol.explored
    factorial = all(explored[n] == explored[n - 1] * n for n in range(7, 11)) and explored[6] == 720
    monotone = all(medians[n] > medians[n - 1] for n in range(7, 11))
    ratios = " ".join(f"{n}:{medians[n] * 1e3:.1f}ms" for n in medians)
    report(9, factorial and monotone, f"explored = n! for n=6..10: {factorial}, median times {ratios}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
