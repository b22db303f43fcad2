"""Restricted Betweenness and the three reductions to shelf arrangement.

pa-sat   two satisficers per triple with linear preferences, mixed scan sides
pa-sc    two successive choosers per triple with a 3-cycle on top
sepa-sc  left-biased successive choosers with four-product top cycles,
         rebuilt from the gadget behaviour tables
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Sequence

import numpy as np

from . import gadget_tables
from .choice import choose_successive, top_cycle
from .core import (
    BetweennessInstance,
    Buyer,
    Catalog,
    Direction,
    Instance,
    InstanceTooLarge,
    Money,
    Rule,
    Tournament,
    validate_betweenness,
)

REDUCTIONS = ("pa-sat", "pa-sc", "sepa-sc")
DEFAULT_BETWEENNESS_LIMIT = 9

SAT_PROFITS = {"U": 2, "V": 1, "W": 0}
SC_PROFITS = {"U": 31, "V": 32, "W": 33, "D1": 1, "D2": 35}
C_GADGET_PROFIT = 129
D_GADGET_PROFIT = 464


def product_name(element: str) -> str:
    return f"p_{element}"


# Betweenness by brute force


@dataclass(frozen=True)
class BetweennessSolution:
    order: tuple[str, ...] | None

    @property
    def satisfiable(self) -> bool:
        return self.order is not None


def satisfies(inst: BetweennessInstance, order: Sequence[str]) -> bool:
    pos = {x: i for i, x in enumerate(order)}
    for a, b, c in inst.triples():
        if not (pos[a] < pos[b] < pos[c] or pos[c] < pos[b] < pos[a]):
            return False
    return True


def solve_betweenness_exhaustive(inst: BetweennessInstance, limit: int = DEFAULT_BETWEENNESS_LIMIT) -> BetweennessSolution:
    """First satisfying order, in lexicographic order of declaration indices."""
    validate_betweenness(inst)
    elems = inst.elements
    if len(elems) > limit:
        raise InstanceTooLarge(f"{len(elems)} elements exceed the betweenness limit of {limit}")
    index = {x: i for i, x in enumerate(elems)}
    triples = [(index[a], index[b], index[c]) for a, b, c in inst.triples()]
    pos = [0] * len(elems)
    for perm in permutations(range(len(elems))):
        for place, x in enumerate(perm):
            pos[x] = place
        if all(pos[a] < pos[b] < pos[c] or pos[c] < pos[b] < pos[a] for a, b, c in triples):
            return BetweennessSolution(tuple(elems[x] for x in perm))
    return BetweennessSolution(None)


# Shared construction helpers


def _element_catalog(inst: BetweennessInstance, profits: dict, dummies: bool = False) -> Catalog:
    pairs = [(product_name(u), profits["U"]) for u in inst.U]
    pairs += [(product_name(v), profits["V"]) for v in inst.V]
    pairs.append((product_name(inst.w), profits["W"]))
    if dummies:
        pairs += [("d1", profits["D1"]), ("d2", profits["D2"])]
    return Catalog.from_pairs(pairs)


def top_block_tournament(n: int, top: Sequence[int], edges: Sequence[tuple[int, int]]) -> Tournament:
    """Tournament with ``top`` above everything and ``edges`` among ``top``.

    The remaining products follow catalog order. Successive choice never
    returns to a non-top product once a top one is in the register, so this
    tail cannot influence any choice.
    """
    table = np.zeros((n, n), dtype=bool)
    rest = [p for p in range(n) if p not in top]
    for i, j in combinations(rest, 2):
        table[i, j] = True
    for t in top:
        table[t, rest] = True
    for winner, loser in edges:
        table[winner, loser] = True
    return Tournament(table)


# pa-sat and pa-sc: two buyers per triple


def reduce_to_pa_sat(inst: BetweennessInstance) -> Instance:
    """Satisficers that take the leftmost / rightmost member of each triple.

    Each buyer ranks the triple (a, b, c) first, in that order, then the
    rest of the catalog. Her threshold is c, the weakest triple member, so
    exactly the triple qualifies and the buyer stops at the first triple
    member she meets from her side of the shelf.
    """
    validate_betweenness(inst)
    catalog = _element_catalog(inst, SAT_PROFITS)
    idx = catalog.index
    n = len(catalog)
    buyers = []
    for k, (a, b, c) in enumerate(inst.triples(), 1):
        trio = [idx[product_name(x)] for x in (a, b, c)]
        ranking = trio + [p for p in range(n) if p not in trio]
        pref = Tournament.from_ranking(ranking)
        for side, direction in (("l", Direction.LEFT), ("r", Direction.RIGHT)):
            buyers.append(Buyer(f"s{k}_{side}", Rule.SAT, direction, pref, trio[2]))
    target = Money.of(4 * len(inst.C) + 3 * len(inst.D))
    return Instance(catalog, tuple(buyers), target)


def reduce_to_pa_sc(inst: BetweennessInstance) -> Instance:
    """Successive choosers with the cycle a > b > c > a on top of everything.

    The left-biased buyer ends on the rightmost triple member and the
    right-biased one on the leftmost, so each pair picks the same two
    products as the satisficer pair (with the sides swapped).
    """
    validate_betweenness(inst)
    catalog = _element_catalog(inst, SAT_PROFITS)
    idx = catalog.index
    n = len(catalog)
    buyers = []
    for k, (a, b, c) in enumerate(inst.triples(), 1):
        pa, pb, pc = (idx[product_name(x)] for x in (a, b, c))
        pref = top_block_tournament(n, (pa, pb, pc), ((pa, pb), (pb, pc), (pc, pa)))
        for side, direction in (("l", Direction.LEFT), ("r", Direction.RIGHT)):
            buyers.append(Buyer(f"s{k}_{side}", Rule.SC, direction, pref))
    target = Money.of(4 * len(inst.C) + 3 * len(inst.D))
    return Instance(catalog, tuple(buyers), target)


# sepa-sc: gadgets recovered from the behaviour tables


@dataclass(frozen=True)
class GadgetRole:
    name: str
    table: str
    column: int
    symbols: tuple[str, str, str, str]
    multiplicity: int
    edges: tuple[tuple[str, str], ...] = ()
    candidates: int = 0

    def tournament(self) -> Tournament:
        at = {s: i for i, s in enumerate(self.symbols)}
        return Tournament.from_pairs(4, [(at[a], at[b]) for a, b in self.edges])


ROLE_SPECS = (
    GadgetRole("b1", "c-d1", 0, ("U_I", "V_J", "U_K", "D1"), 1),
    GadgetRole("b2", "c-d1", 1, ("U_I", "V_J", "U_K", "D1"), 1),
    GadgetRole("b3", "c-d2", 0, ("U_I", "V_J", "U_K", "D2"), 1),
    GadgetRole("b4", "c-d2", 1, ("U_I", "V_J", "U_K", "D2"), 1),
    GadgetRole("b1", "d-d1", 0, ("V_I", "W", "U_J", "D1"), 1),
    GadgetRole("b2", "d-d1", 1, ("V_I", "W", "U_J", "D1"), 1),
    GadgetRole("b3", "d-d2", 0, ("V_I", "W", "U_J", "D2"), 5),
    GadgetRole("b4", "d-d2", 1, ("V_I", "W", "U_J", "D2"), 7),
)


@dataclass(frozen=True)
class GadgetLibrary:
    c_buyers: tuple[GadgetRole, ...]
    d_buyers: tuple[GadgetRole, ...]
    tables: dict = field(default_factory=lambda: gadget_tables.TABLES, compare=False)

    @property
    def roles(self) -> tuple[GadgetRole, ...]:
        return self.c_buyers + self.d_buyers


class GadgetTableError(ValueError):
    pass


def _table_orderings(rows):
    """Expand each row into its two shelves, with the two roles' choices."""
    for a, b, c, d, first, second in rows:
        for order in ((a, b, c, d), (b, a, c, d)):
            yield order, (first, second)


def _role_choice(t: Tournament, symbols, order) -> str:
    at = {s: i for i, s in enumerate(symbols)}
    return symbols[choose_successive([at[s] for s in order], t, Direction.LEFT)]


def consistent_tournaments(role: GadgetRole, rows) -> list[tuple[tuple[str, str], ...]]:
    """All strongly connected 4-tournaments reproducing one table column.

    Orientation vectors are enumerated in lexicographic order over the pairs
    of ``role.symbols`` (0 = earlier symbol wins), so the first hit is the
    canonical one.
    """
    pairs = list(combinations(role.symbols, 2))
    expected = list(_table_orderings(rows))
    found = []
    for bits in product((0, 1), repeat=len(pairs)):
        edges = tuple((a, b) if bit == 0 else (b, a) for (a, b), bit in zip(pairs, bits))
        t = GadgetRole(role.name, role.table, role.column, role.symbols, 1, edges).tournament()
        if len(top_cycle(t)) != 4:
            continue
        if all(_role_choice(t, role.symbols, order) == picks[role.column] for order, picks in expected):
            found.append(edges)
    return found


def derive_gadgets(tables=None) -> GadgetLibrary:
    """Search the 64 tournaments per role for ones matching the tables."""
    if tables is None:
        tables = gadget_tables.TABLES
        if gadget_tables.checksum(tables) != gadget_tables.TABLES_SHA256:
            raise GadgetTableError("embedded gadget tables fail their checksum")
    roles = []
    for spec in ROLE_SPECS:
        found = consistent_tournaments(spec, tables[spec.table])
        if not found:
            raise GadgetTableError(f"no consistent tournament for role {spec.table}/{spec.name}")
        roles.append(
            GadgetRole(spec.name, spec.table, spec.column, spec.symbols, spec.multiplicity, found[0], len(found))
        )
    return GadgetLibrary(tuple(roles[:4]), tuple(roles[4:]), tables)


def verify_gadget_tables(lib: GadgetLibrary) -> list[str]:
    """Replay every table shelf through each role; returns the mismatches."""
    mismatches = []
    for role in lib.roles:
        t = role.tournament()
        for order, picks in _table_orderings(lib.tables[role.table]):
            got = _role_choice(t, role.symbols, order)
            if got != picks[role.column]:
                mismatches.append(
                    f"{role.table}/{role.name} on ({', '.join(order)}): got {got}, table says {picks[role.column]}"
                )
    return mismatches


def _gadget_buyers(lib_roles, binding: dict[str, int], n: int, prefix: str) -> list[Buyer]:
    buyers = []
    for role in lib_roles:
        top = [binding[s] for s in role.symbols]
        edges = [(binding[a], binding[b]) for a, b in role.edges]
        pref = top_block_tournament(n, top, edges)
        for copy in range(1, role.multiplicity + 1):
            name = f"{prefix}_{role.name}" if role.multiplicity == 1 else f"{prefix}_{role.name}_{copy}"
            buyers.append(Buyer(name, Rule.SC, Direction.LEFT, pref))
    return buyers


def reduce_to_sepa_sc(inst: BetweennessInstance, lib: GadgetLibrary | None = None) -> Instance:
    validate_betweenness(inst)
    lib = lib or derive_gadgets()
    catalog = _element_catalog(inst, SC_PROFITS, dummies=True)
    idx = catalog.index
    n = len(catalog)
    d1, d2 = idx["d1"], idx["d2"]
    buyers: list[Buyer] = []
    for k, (ui, vj, uk) in enumerate(inst.C, 1):
        binding = {"U_I": idx[product_name(ui)], "V_J": idx[product_name(vj)], "U_K": idx[product_name(uk)],
                   "D1": d1, "D2": d2}
        buyers += _gadget_buyers(lib.c_buyers, binding, n, f"C{k}")
    for k, (vi, uj) in enumerate(inst.D, 1):
        binding = {"V_I": idx[product_name(vi)], "W": idx[product_name(inst.w)], "U_J": idx[product_name(uj)],
                   "D1": d1, "D2": d2}
        buyers += _gadget_buyers(lib.d_buyers, binding, n, f"D{k}")
    target = Money.of(C_GADGET_PROFIT * len(inst.C) + D_GADGET_PROFIT * len(inst.D))
    return Instance(catalog, tuple(buyers), target)


def gadget_instance(kind: str, lib: GadgetLibrary | None = None) -> Instance:
    """One C- or D-gadget alone: its five products and its buyers."""
    lib = lib or derive_gadgets()
    if kind == "C":
        names = [("p_ui", "U"), ("p_vj", "V"), ("p_uk", "U")]
        symbols, roles = ("U_I", "V_J", "U_K"), lib.c_buyers
    elif kind == "D":
        names = [("p_vi", "V"), ("p_w", "W"), ("p_uj", "U")]
        symbols, roles = ("V_I", "W", "U_J"), lib.d_buyers
    else:
        raise ValueError(f"unknown gadget kind {kind!r}")
    pairs = [(name, SC_PROFITS[kind_]) for name, kind_ in names]
    pairs += [("d1", SC_PROFITS["D1"]), ("d2", SC_PROFITS["D2"])]
    catalog = Catalog.from_pairs(pairs)
    binding = dict(zip(symbols, range(3)))
    binding.update(D1=3, D2=4)
    buyers = _gadget_buyers(roles, binding, 5, kind)
    target = C_GADGET_PROFIT if kind == "C" else D_GADGET_PROFIT
    return Instance(catalog, tuple(buyers), Money.of(target))


def reduce(inst: BetweennessInstance, target: str, lib: GadgetLibrary | None = None) -> Instance:
    if target == "pa-sat":
        return reduce_to_pa_sat(inst)
    if target == "pa-sc":
        return reduce_to_pa_sc(inst)
    if target == "sepa-sc":
        return reduce_to_sepa_sc(inst, lib)
    raise ValueError(f"unknown reduction {target!r}; expected one of {', '.join(REDUCTIONS)}")


def embed_order(inst: BetweennessInstance, order: Sequence[str], reduced: Instance) -> tuple[int, ...]:
    """Shelf realising a betweenness order; dummies go to the two ends."""
    idx = reduced.catalog.index
    shelf = [idx[product_name(x)] for x in order]
    if "d1" in idx:
        shelf = [idx["d1"]] + shelf + [idx["d2"]]
    return tuple(shelf)


@dataclass
class EquivalenceReport:
    reduction: str
    betweenness: BetweennessSolution
    reaches_target: bool
    best_value: Money
    target: Money
    shelf: tuple[str, ...] | None

    @property
    def equivalent(self) -> bool:
        return self.betweenness.satisfiable == self.reaches_target

    def lines(self) -> list[str]:
        order = self.betweenness.order
        return [
            f"reduction={self.reduction}",
            f"betweenness={'yes' if order else 'no'}",
            f"betweenness_order={','.join(order) if order else '-'}",
            f"target={self.target}",
            f"reduced={'yes' if self.reaches_target else 'no'}",
            f"reduced_value={self.best_value}",
            f"reduced_list={','.join(self.shelf) if self.shelf else '-'}",
            f"equivalent={'yes' if self.equivalent else 'no'}",
        ]


def verify_reduction_equivalence(
    inst: BetweennessInstance,
    target: str,
    betweenness_limit: int = DEFAULT_BETWEENNESS_LIMIT,
    exact_limit: int | None = None,
    lib: GadgetLibrary | None = None,
) -> EquivalenceReport:
    """Decide both sides by exhaustive search and compare the answers."""
    from .solvers import DEFAULT_EXACT_LIMIT, solve_exact

    source = solve_betweenness_exhaustive(inst, betweenness_limit)
    reduced = reduce(inst, target, lib)
    sol = solve_exact(reduced, exact_limit or DEFAULT_EXACT_LIMIT, stop_at_target=True)
    shelf = tuple(reduced.names_of(sol.witness)) if sol.witness else None
    return EquivalenceReport(target, source, bool(sol.decision), sol.best_value, reduced.target, shelf)
