"""Choice from lists: rational, satisficing and successive choice.

"Top cycle" and "top circle" name the same set: the smallest group of
products that each beat every product outside it.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .core import Buyer, Direction, LinearPreference, Rule, Tournament


def strongly_connected_components(n: int, successors: Callable[[int], Iterable[int]]) -> list[list[int]]:
    """Iterative Tarjan. Components come out sinks first (reverse topological)."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, iter(successors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            for u in it:
                if index[u] == -1:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, iter(successors(u))))
                    break
                if on_stack[u] and index[u] < low[v]:
                    low[v] = index[u]
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                if low[v] == index[v]:
                    comp = []
                    while True:
                        u = stack.pop()
                        on_stack[u] = False
                        comp.append(u)
                        if u == v:
                            break
                    out.append(comp)
    return out


def top_cycle(t: Tournament) -> frozenset[int]:
    """Source component of the tournament's condensation, O(n^2)."""
    if t.is_ranked:
        return frozenset([t.ranking[0]])
    rows = t.rows
    n = t.n

    def successors(v):
        row = rows[v]
        return (u for u in range(n) if row[u])

    # the condensation of a tournament is a chain, so the last emitted
    # component is its unique source
    return frozenset(strongly_connected_components(n, successors)[-1])


def single_top(t: Tournament) -> int | None:
    """The product beating all others, if any, in O(n)."""
    if t.is_ranked:
        return t.ranking[0]
    rows = t.rows
    cand = 0
    for q in range(1, t.n):
        if rows[q][cand]:
            cand = q
    row = rows[cand]
    for q in range(t.n):
        if q != cand and not row[q]:
            return None
    return cand


def choose_rational(pref: LinearPreference) -> int:
    return pref.ranking[0]


def _scan(order: Sequence[int], direction: Direction) -> Sequence[int]:
    return order if direction is Direction.LEFT else order[::-1]


def choose_satisficing(order: Sequence[int], t: Tournament, direction: Direction, threshold: int) -> int:
    """First product in scan order weakly preferred to the threshold.

    Total because the threshold itself is on the shelf.
    """
    seq = _scan(order, direction)
    pos = t.positions
    if pos is not None:
        bar = pos[threshold]
        for q in seq:
            if pos[q] <= bar:
                return q
    else:
        rows = t.rows
        for q in seq:
            if q == threshold or rows[q][threshold]:
                return q
    raise ValueError("threshold product is missing from the list")


def choose_successive(order: Sequence[int], t: Tournament, direction: Direction) -> int:
    """Keep a register; replace it whenever the next product beats it."""
    seq = _scan(order, direction)
    it = iter(seq)
    reg = next(it)
    pos = t.positions
    if pos is not None:
        for q in it:
            if pos[q] < pos[reg]:
                reg = q
    else:
        rows = t.rows
        for q in it:
            if rows[q][reg]:
                reg = q
    return reg


def choose(buyer: Buyer, order: Sequence[int]) -> int:
    rule = buyer.rule
    if rule is Rule.RC:
        pref = buyer.preference
        if isinstance(pref, LinearPreference):
            return choose_rational(pref)
        return pref.ranking[0]
    if rule is Rule.SAT:
        return choose_satisficing(order, buyer.tournament, buyer.direction, buyer.threshold)
    return choose_successive(order, buyer.tournament, buyer.direction)


def feasible_choices(buyer: Buyer) -> frozenset[int]:
    """Every product the buyer could end up with on some list."""
    if buyer.rule is Rule.RC:
        return frozenset([choose(buyer, ())])
    t = buyer.tournament
    if buyer.rule is Rule.SC:
        return top_cycle(t)
    bar = buyer.threshold
    return frozenset(q for q in range(t.n) if q == bar or t.beats(q, bar))
