"""Seeded random instances for tests, sweeps and benchmarks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .core import (
    BetweennessInstance,
    Buyer,
    Catalog,
    Direction,
    Instance,
    LinearPreference,
    Money,
    Rule,
    Tournament,
)


class InfeasibleSpec(ValueError):
    pass


@dataclass(frozen=True)
class RandomSpec:
    n: int
    m: int
    rule: str = "sc"
    direction: str = "L"  # "L", "R" or "mixed"
    p_left: float = 0.5
    tc_size: int | None = None  # 1, 3 or None for unconstrained
    profit_min: int = 0
    profit_max: int = 10
    seed: int = 0


def random_tournament(rng: random.Random, n: int) -> Tournament:
    table = np.zeros((n, n), dtype=bool)
    for i, j in combinations(range(n), 2):
        if rng.random() < 0.5:
            table[i, j] = True
        else:
            table[j, i] = True
    return Tournament(table)


def planted_cycle_tournament(rng: random.Random, n: int, tail_random: bool = False) -> Tournament:
    """Three products in a cycle above everything else.

    The rest is a random linear order, or a random tournament when
    ``tail_random`` is set.
    """
    order = list(range(n))
    rng.shuffle(order)
    a, b, c = order[:3]
    rest = order[3:]
    table = np.zeros((n, n), dtype=bool)
    table[a, b] = table[b, c] = table[c, a] = True
    for top in (a, b, c):
        table[top, rest] = True
    for i, j in combinations(range(len(rest)), 2):
        x, y = rest[i], rest[j]
        if tail_random and rng.random() < 0.5:
            x, y = y, x
        table[x, y] = True
    return Tournament(table)


def random_preference(rng: random.Random, n: int, tc_size: int | None, dense: bool = False) -> Tournament:
    if tc_size == 1:
        ranking = list(range(n))
        rng.shuffle(ranking)
        t = Tournament.from_ranking(ranking)
        return Tournament(t.table) if dense else t
    if tc_size == 3:
        return planted_cycle_tournament(rng, n)
    return random_tournament(rng, n)


def _direction(rng: random.Random, spec: RandomSpec) -> Direction:
    if spec.direction == "mixed":
        return Direction.LEFT if rng.random() < spec.p_left else Direction.RIGHT
    return Direction(spec.direction)


def gen_random(spec: RandomSpec) -> Instance:
    if spec.tc_size not in (None, 1, 3):
        raise InfeasibleSpec(f"tc_size must be 1, 3 or unconstrained, got {spec.tc_size}")
    if spec.tc_size == 3 and spec.n < 3:
        raise InfeasibleSpec("a top cycle of size 3 needs at least 3 products")
    if spec.n < 1 or spec.m < 0 or spec.profit_min < 0 or spec.profit_max < spec.profit_min:
        raise InfeasibleSpec("need n >= 1, m >= 0 and 0 <= profit_min <= profit_max")
    if spec.direction not in ("L", "R", "mixed"):
        raise InfeasibleSpec(f"unknown direction mix {spec.direction!r}")
    rule = Rule(spec.rule)
    rng = random.Random(spec.seed)
    names = [f"p{i + 1}" for i in range(spec.n)]
    profits = [Money.of(rng.randint(spec.profit_min, spec.profit_max)) for _ in names]
    buyers = []
    for k in range(spec.m):
        direction = _direction(rng, spec)
        name = f"b{k + 1}"
        if rule is Rule.RC:
            ranking = list(range(spec.n))
            rng.shuffle(ranking)
            buyers.append(Buyer(name, rule, direction, LinearPreference(tuple(ranking))))
            continue
        pref = random_preference(rng, spec.n, spec.tc_size)
        threshold = rng.randrange(spec.n) if rule is Rule.SAT else None
        buyers.append(Buyer(name, rule, direction, pref, threshold))
    return Instance(Catalog(tuple(names), tuple(profits)), tuple(buyers))


def random_betweenness(rng: random.Random, max_u: int = 3, max_v: int = 2, max_c: int = 2, max_d: int = 2) -> BetweennessInstance:
    nu = rng.randint(2, max_u)
    nv = rng.randint(1, max_v)
    U = tuple(f"u{i + 1}" for i in range(nu))
    V = tuple(f"v{i + 1}" for i in range(nv))
    C = []
    for _ in range(rng.randint(0, max_c)):
        ui, uk = rng.sample(U, 2)
        C.append((ui, rng.choice(V), uk))
    D = [(rng.choice(V), rng.choice(U)) for _ in range(rng.randint(0, max_d))]
    return BetweennessInstance(U, V, "w", tuple(C), tuple(D))
