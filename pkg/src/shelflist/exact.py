"""Exhaustive search over shelves for the NP-hard regimes.

Permutations are visited in lexicographic order of product ids, split into
one block per leading product. Each block is scored with numpy; blocks are
independent, so they can be farmed out to worker processes and reduced in
block order, which keeps the reported witness independent of scheduling.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .choice import choose, choose_satisficing, choose_successive, top_cycle
from .core import Direction, Instance, InstanceTooLarge, Rule

_INT64_HEADROOM = 2**62


@lru_cache(maxsize=4)
def lex_permutations(k: int) -> np.ndarray:
    """All permutations of range(k), one per row, in lexicographic order."""
    perms = np.zeros((1, 0), dtype=np.int8)
    for size in range(1, k + 1):
        blocks = []
        for first in range(size):
            rest = np.array([x for x in range(size) if x != first], dtype=np.int8)
            block = np.empty((perms.shape[0], size), dtype=np.int8)
            block[:, 0] = first
            block[:, 1:] = rest[perms]
            blocks.append(block)
        perms = np.concatenate(blocks)
    perms.setflags(write=False)
    return perms


@dataclass
class Compiled:
    """Buyers grouped by identical behaviour, as arrays."""

    n: int
    profits: np.ndarray
    constant: int
    successive: list  # (beats table, reversed scan, count)
    satisficing: list  # (qualifying mask, reversed scan, count)
    target: int | None


def compile_instance(inst: Instance) -> Compiled:
    micros = inst.catalog.micros
    groups = Counter()
    for b in inst.buyers:
        if b.rule is Rule.RC:
            groups[("rc", choose(b, ()))] += 1
        elif b.rule is Rule.SC:
            groups[("sc", b.direction, b.tournament)] += 1
        else:
            groups[("sat", b.direction, b.tournament, b.threshold)] += 1
    constant = 0
    successive, satisficing = [], []
    bound = 0
    top = max(micros)
    for key, count in groups.items():
        bound += count * top
        if key[0] == "rc":
            constant += count * micros[key[1]]
        elif key[0] == "sc":
            successive.append((key[2].table, key[1] is Direction.RIGHT, count))
        else:
            t, bar = key[2], key[3]
            mask = t.table[:, bar].copy()
            mask[bar] = True
            satisficing.append((mask, key[1] is Direction.RIGHT, count))
    if bound >= _INT64_HEADROOM:
        raise OverflowError("profit totals exceed the 64-bit enumeration range")
    target = None if inst.target is None else inst.target.micros
    return Compiled(inst.n, np.array(micros, dtype=np.int64), constant, successive, satisficing, target)


def score_block(c: Compiled, perms: np.ndarray) -> np.ndarray:
    rows = perms.shape[0]
    values = np.full(rows, c.constant, dtype=np.int64)
    perms = perms.astype(np.intp)
    backwards = perms[:, ::-1]
    for beats, rev, count in c.successive:
        seq = backwards if rev else perms
        reg = seq[:, 0]
        for i in range(1, c.n):
            q = seq[:, i]
            reg = np.where(beats[q, reg], q, reg)
        values += count * c.profits[reg]
    arange = np.arange(rows)
    for mask, rev, count in c.satisficing:
        seq = backwards if rev else perms
        first = mask[seq].argmax(axis=1)
        values += count * c.profits[seq[arange, first]]
    return values


def _block(args):
    c, first, stop_at_target = args
    n = c.n
    rest = np.array([x for x in range(n) if x != first], dtype=np.int8)
    tail = lex_permutations(n - 1)
    perms = np.empty((tail.shape[0], n), dtype=np.int8)
    perms[:, 0] = first
    perms[:, 1:] = rest[tail]
    values = score_block(c, perms)
    i = int(values.argmax())  # first maximum = lexicographically least
    best = (int(values[i]), tuple(int(x) for x in perms[i]))
    hit = None
    if stop_at_target:
        hits = np.flatnonzero(values >= c.target)
        if hits.size:
            j = int(hits[0])
            hit = (int(values[j]), tuple(int(x) for x in perms[j]), j + 1)
    return best, hit, perms.shape[0]


def _check_size(inst: Instance, limit: int) -> None:
    if inst.n > limit:
        raise InstanceTooLarge(f"{inst.n} products exceed the exact-search limit of {limit}")


def enumerate_best(inst: Instance, limit: int, stop_at_target: bool = False, workers: int = 1):
    """Returns (value in micros, witness, lists evaluated)."""
    _check_size(inst, limit)
    c = compile_instance(inst)
    jobs = [(c, first, stop_at_target) for first in range(inst.n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_block, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_block(job))
            if results[-1][1] is not None:
                break
    explored = 0
    best = None
    for block_best, hit, count in results:
        if hit is not None:
            return hit[0], hit[1], explored + hit[2]
        explored += count
        if best is None or block_best[0] > best[0]:
            best = block_best
    return best[0], best[1], explored


def branch_and_bound(inst: Instance, limit: int, stop_at_target: bool = False):
    """Depth-first search in lexicographic order with an admissible bound.

    Each buyer's bound is the best profit still reachable given the prefix:
    exact once a left-biased satisficer has met a qualifying product; for a
    left-biased successive chooser, the register or an unplaced top-cycle
    member; otherwise the best of her feasible choice set.
    """
    _check_size(inst, limit)
    n = inst.n
    micros = inst.catalog.micros
    groups = Counter()
    for b in inst.buyers:
        key = (b.rule, b.direction, b.tournament if b.rule is not Rule.RC else choose(b, ()), b.threshold)
        groups[key] += 1
    plans = []
    constant = 0
    for (rule, direction, pref, bar), count in groups.items():
        if rule is Rule.RC:
            constant += count * micros[pref]
            continue
        if rule is Rule.SC:
            feasible = top_cycle(pref)
        else:
            feasible = frozenset(q for q in range(n) if q == bar or pref.beats(q, bar))
        plans.append((rule, direction, pref, bar, count, feasible, max(micros[q] for q in feasible)))

    def bound(prefix, placed):
        total = constant
        for rule, direction, pref, bar, count, feasible, best_feasible in plans:
            left = direction is Direction.LEFT
            if rule is Rule.SAT:
                hit = [q for q in prefix if q in feasible]
                if left and hit:
                    total += count * micros[hit[0]]
                    continue
                open_ = [micros[q] for q in feasible if q not in placed]
                if open_:
                    total += count * max(open_)
                else:
                    total += count * micros[hit[-1]]
            elif left and prefix:
                reg = prefix[0]
                for q in prefix[1:]:
                    if pref.beats(q, reg):
                        reg = q
                reachable = [micros[q] for q in feasible if q == reg or q not in placed]
                total += count * max(reachable)
            else:
                total += count * best_feasible
        return total

    def value(order):
        total = constant
        for rule, direction, pref, bar, count, _, _ in plans:
            if rule is Rule.SC:
                got = choose_successive(order, pref, direction)
            else:
                got = choose_satisficing(order, pref, direction, bar)
            total += count * micros[got]
        return total

    target = None if inst.target is None else inst.target.micros
    best = [None, None]
    explored = [0]
    prefix: list[int] = []
    placed: set[int] = set()

    def dfs() -> bool:
        if len(prefix) == n:
            explored[0] += 1
            v = value(prefix)
            if best[0] is None or v > best[0]:
                best[0], best[1] = v, tuple(prefix)
            return stop_at_target and v >= target
        if best[0] is not None and bound(prefix, placed) <= best[0]:
            return False
        for q in range(n):
            if q in placed:
                continue
            prefix.append(q)
            placed.add(q)
            done = dfs()
            prefix.pop()
            placed.discard(q)
            if done:
                return True
        return False

    dfs()
    return best[0], best[1], explored[0]
