"""Polynomial solvers for the tractable regimes and an exact enumerator."""

from __future__ import annotations

from dataclasses import dataclass

from .choice import single_top, top_cycle
from .core import Direction, Instance, Money, NotApplicable, Rule, evaluate_list

DEFAULT_EXACT_LIMIT = 10


@dataclass(frozen=True)
class Solution:
    best_value: Money
    witness: tuple[int, ...] | None
    decision: bool | None
    method: str
    explored: int | None = None

    def describe(self, inst: Instance) -> list[str]:
        """Machine-readable result lines."""
        decision = "n/a" if self.decision is None else ("yes" if self.decision else "no")
        lines = [
            f"decision={decision}",
            f"best_value={self.best_value}",
            f"method={self.method}",
        ]
        if self.witness is not None:
            lines.append("list=" + ",".join(inst.names_of(self.witness)))
        return lines


def _solution(inst: Instance, value: Money, witness, method: str, explored=None) -> Solution:
    decision = None if inst.target is None else value >= inst.target
    return Solution(value, witness, decision, method, explored)


def _fixed_top(buyer) -> int | None:
    """Product the buyer takes on every list, or None if position matters."""
    if buyer.rule is Rule.RC:
        return buyer.preference.ranking[0]
    if buyer.rule is Rule.SC:
        return single_top(buyer.tournament)
    return None


def solve_rc(inst: Instance) -> Solution:
    """Sum of the buyers' top products; also accepts single-top SC buyers."""
    micros = inst.catalog.micros
    total = 0
    for b in inst.buyers:
        if b.rule is Rule.RC:
            total += micros[b.preference.ranking[0]]
            continue
        top = _fixed_top(b)
        if top is None:
            raise NotApplicable(f"buyer {b.name} is position-dependent")
        total += micros[top]
    return _solution(inst, Money(total), tuple(range(inst.n)), "rc")


def solve_sepa_sat(inst: Instance) -> Solution:
    """Left-biased satisficers: shelve by profit, highest first."""
    for b in inst.buyers:
        if b.rule is not Rule.SAT or b.direction is not Direction.LEFT:
            raise NotApplicable(f"buyer {b.name} is not a left-biased satisficer")
    micros = inst.catalog.micros
    order = tuple(sorted(range(inst.n), key=lambda p: (-micros[p], p)))
    return _solution(inst, evaluate_list(inst, order), order, "sepa-sat")


def solve_pa_sc_singleton(inst: Instance) -> Solution:
    micros = inst.catalog.micros
    total = 0
    for b in inst.buyers:
        if b.rule is not Rule.SC:
            raise NotApplicable(f"buyer {b.name} does not use successive choice")
        top = single_top(b.tournament)
        if top is None:
            raise NotApplicable(f"buyer {b.name} has more than one top favorite")
        total += micros[top]
    return _solution(inst, Money(total), tuple(range(inst.n)), "pa-sc-t1")


def solve_sepa_sc_small_tc(inst: Instance) -> Solution:
    """Left-biased successive choosers with top cycles of size 1 or 3.

    On the profit-ascending shelf each buyer ends on the last top-cycle
    member she meets, which is her most profitable one.
    """
    micros = inst.catalog.micros
    total = 0
    for b in inst.buyers:
        if b.rule is not Rule.SC or b.direction is not Direction.LEFT:
            raise NotApplicable(f"buyer {b.name} is not a left-biased successive chooser")
        tc = top_cycle(b.tournament)
        if len(tc) > 3:
            raise NotApplicable(f"buyer {b.name} has {len(tc)} top favorites")
        assert len(tc) != 2, "tournaments have no top cycle of size 2"
        total += max(micros[p] for p in tc)
    order = tuple(sorted(range(inst.n), key=lambda p: (micros[p], p)))
    return _solution(inst, Money(total), order, "sepa-sc-t3")


def solve_exact(
    inst: Instance,
    limit: int = DEFAULT_EXACT_LIMIT,
    *,
    stop_at_target: bool = False,
    prune: bool = False,
    workers: int = 1,
) -> Solution:
    """Maximum over all n! shelves, with the lexicographically least optimal list.

    With ``stop_at_target`` (decision mode only) the search returns the first
    list in lexicographic order that reaches the target; its value is then
    reported as best_value even if better lists exist.
    """
    from .exact import enumerate_best, branch_and_bound

    if stop_at_target and inst.target is None:
        raise ValueError("stop_at_target needs a target")
    if prune:
        value, witness, explored = branch_and_bound(inst, limit, stop_at_target)
    else:
        value, witness, explored = enumerate_best(inst, limit, stop_at_target, workers)
    return _solution(inst, Money(value), witness, "exact", explored)


def _applicable(inst: Instance) -> str:
    buyers = inst.buyers
    rules = {b.rule for b in buyers}
    all_left = all(b.direction is Direction.LEFT for b in buyers)
    if rules <= {Rule.RC}:
        return "rc"
    if rules == {Rule.SC} and all(single_top(b.tournament) is not None for b in buyers):
        return "pa-sc-t1"
    if rules <= {Rule.RC, Rule.SC} and all(_fixed_top(b) is not None for b in buyers):
        return "rc"
    if rules == {Rule.SAT} and all_left:
        return "sepa-sat"
    if rules == {Rule.SC} and all_left and all(len(top_cycle(b.tournament)) <= 3 for b in buyers):
        return "sepa-sc-t3"
    return "exact"


METHODS = {
    "rc": solve_rc,
    "pa-sc-t1": solve_pa_sc_singleton,
    "sepa-sat": solve_sepa_sat,
    "sepa-sc-t3": solve_sepa_sc_small_tc,
    "exact": solve_exact,
}


def solve_auto(inst: Instance, limit: int = DEFAULT_EXACT_LIMIT, workers: int = 1) -> Solution:
    method = _applicable(inst)
    if method == "exact":
        return solve_exact(inst, limit, workers=workers)
    return METHODS[method](inst)
