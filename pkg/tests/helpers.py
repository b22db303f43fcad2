"""Oracles and generators shared by the test modules."""

from itertools import combinations, permutations

from shelflist import (
    Buyer,
    Catalog,
    Direction,
    Instance,
    LinearPreference,
    Money,
    Rule,
    Tournament,
    evaluate_list,
)
from shelflist.generate import random_preference, random_tournament

L, R = Direction.LEFT, Direction.RIGHT


def cycle_tournament(n, cycle, rest_order=None):
    """``cycle`` = (a, b, c) with a>b>c>a above a linear tail."""
    a, b, c = cycle
    rest = rest_order if rest_order is not None else [p for p in range(n) if p not in cycle]
    pairs = [(a, b), (b, c), (c, a)]
    pairs += [(t, r) for t in cycle for r in rest]
    pairs += [(rest[i], rest[j]) for i, j in combinations(range(len(rest)), 2)]
    return Tournament.from_pairs(n, pairs)


def brute_top_cycle(t):
    """Smallest non-empty set whose members beat every outsider."""
    n = t.n
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            inside = set(subset)
            if all(t.beats(a, b) for a in inside for b in range(n) if b not in inside):
                return frozenset(subset)
    raise AssertionError("unreachable")


def brute_max(inst):
    """Plain-Python maximum over all shelves: (value, first optimal list)."""
    best = None
    for order in permutations(range(inst.n)):
        v = evaluate_list(inst, order)
        if best is None or v > best[0]:
            best = (v, order)
    return best


def instance_of(rule, n, m, rng, *, direction="L", tc_size=None, profit_max=10):
    """Small random instance inside one precondition class."""
    cat = Catalog(tuple(f"p{i}" for i in range(n)), tuple(Money.of(rng.randint(0, profit_max)) for _ in range(n)))
    buyers = []
    for k in range(m):
        d = {"L": L, "R": R}.get(direction) or rng.choice([L, R])
        if rule is Rule.RC:
            ranking = rng.sample(range(n), n)
            buyers.append(Buyer(f"b{k}", rule, d, LinearPreference(tuple(ranking))))
        elif rule is Rule.SAT:
            t = random_tournament(rng, n) if tc_size is None else random_preference(rng, n, tc_size)
            buyers.append(Buyer(f"b{k}", rule, d, t, rng.randrange(n)))
        else:
            size = tc_size if tc_size != "1or3" else rng.choice([1, 3] if n >= 3 else [1])
            t = random_preference(rng, n, size, dense=True)
            buyers.append(Buyer(f"b{k}", rule, d, t))
    return Instance(cat, tuple(buyers))
