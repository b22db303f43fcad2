"""Domain types for shelf-arrangement instances and the shared objective."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

MICROS = 1_000_000
_MONEY_RE = re.compile(r"^(-?)(\d+)(?:\.(\d+))?$")


class InvalidInstance(ValueError):
    """Raised with every invariant violation found, not just the first."""

    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class InstanceTooLarge(ValueError):
    pass


class NotApplicable(ValueError):
    """A solver was handed an instance outside its precondition class."""


@dataclass(frozen=True, order=True, slots=True)
class Money:
    """Exact fixed-point amount stored as integer millionths."""

    micros: int = 0

    @classmethod
    def parse(cls, text: str) -> Money:
        m = _MONEY_RE.match(text.strip())
        if m is None:
            raise ValueError(f"not a decimal amount: {text!r}")
        sign, whole, frac = m.groups()
        frac = frac or ""
        if len(frac) > 6:
            raise ValueError(f"more than 6 fractional digits: {text!r}")
        micros = int(whole) * MICROS + int(frac.ljust(6, "0") or 0)
        return cls(-micros if sign else micros)

    @classmethod
    def of(cls, value: int | str | Money) -> Money:
        if isinstance(value, Money):
            return value
        if isinstance(value, int):
            return cls(value * MICROS)
        return cls.parse(value)

    def __str__(self) -> str:
        whole, frac = divmod(abs(self.micros), MICROS)
        sign = "-" if self.micros < 0 else ""
        if frac == 0:
            return f"{sign}{whole}"
        return f"{sign}{whole}.{frac:06d}".rstrip("0")

    def __add__(self, other: Money) -> Money:
        if not isinstance(other, Money):
            return NotImplemented
        return Money(self.micros + other.micros)

    def __radd__(self, other):
        # lets sum() start from the int 0
        if other == 0:
            return self
        return NotImplemented

    def __sub__(self, other: Money) -> Money:
        if not isinstance(other, Money):
            return NotImplemented
        return Money(self.micros - other.micros)

    def __mul__(self, k: int) -> Money:
        if not isinstance(k, int):
            return NotImplemented
        return Money(self.micros * k)

    __rmul__ = __mul__


class Direction(str, enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def omega(self) -> int:
        return 1 if self is Direction.LEFT else 0


class Rule(str, enum.Enum):
    RC = "rc"
    SAT = "sat"
    SC = "sc"


@dataclass(frozen=True)
class Catalog:
    names: tuple[str, ...]
    profits: tuple[Money, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "profits", tuple(Money.of(p) for p in self.profits))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int | str | Money]]) -> Catalog:
        pairs = list(pairs)
        return cls(tuple(n for n, _ in pairs), tuple(Money.of(p) for _, p in pairs))

    def __len__(self) -> int:
        return len(self.names)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @cached_property
    def micros(self) -> tuple[int, ...]:
        return tuple(p.micros for p in self.profits)


class Tournament:
    """Orientation of every product pair.

    Two storage forms: a dense boolean table, or (for transitive relations)
    a rank position per product, which keeps large linear preferences O(n).
    A dense table may be incomplete or symmetric until validated.
    """

    __slots__ = ("n", "_pos", "_table", "_rows", "__dict__")

    def __init__(self, table):
        table = np.array(table, dtype=bool)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError("tournament table must be square")
        table.setflags(write=False)
        self.n = table.shape[0]
        self._table = table
        self._rows = table.tolist()
        self._pos = None

    @classmethod
    def from_ranking(cls, ranking: Sequence[int]) -> Tournament:
        self = cls.__new__(cls)
        self.n = len(ranking)
        pos = [0] * self.n
        for place, p in enumerate(ranking):
            pos[p] = place
        self._pos = pos
        self._table = None
        self._rows = None
        return self

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Tournament:
        table = np.zeros((n, n), dtype=bool)
        for winner, loser in pairs:
            table[winner, loser] = True
        return cls(table)

    @property
    def is_ranked(self) -> bool:
        return self._pos is not None

    @property
    def positions(self) -> list[int] | None:
        return self._pos

    def beats(self, i: int, j: int) -> bool:
        if self._pos is not None:
            return self._pos[i] < self._pos[j]
        return self._rows[i][j]

    @property
    def rows(self) -> list[list[bool]]:
        if self._rows is None:
            self._rows = self.table.tolist()
        return self._rows

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            pos = np.asarray(self._pos)
            table = pos[:, None] < pos[None, :]
            table.setflags(write=False)
            self._table = table
        return self._table

    @cached_property
    def ranking(self) -> tuple[int, ...] | None:
        """Best-first order if the relation is a valid transitive tournament."""
        if self._pos is not None:
            return tuple(sorted(range(self.n), key=self._pos.__getitem__))
        wins = self._table.sum(axis=1)
        if sorted(wins.tolist()) != list(range(self.n)):
            return None
        order = tuple(int(i) for i in np.argsort(-wins, kind="stable"))
        expected = Tournament.from_ranking(order).table
        return order if np.array_equal(expected, self._table) else None

    def problems(self, names: Sequence[str]) -> list[str]:
        if self._pos is not None:
            return []
        out = []
        t = self._table
        for i in range(self.n):
            if t[i, i]:
                out.append(f"reflexive pair: {names[i]} beats itself")
        for i, j in combinations(range(self.n), 2):
            if t[i, j] and t[j, i]:
                out.append(f"symmetric pair {{{names[i]},{names[j]}}}")
            elif not t[i, j] and not t[j, i]:
                out.append(f"incomplete tournament: pair {{{names[i]},{names[j]}}} unoriented")
        return out

    def __eq__(self, other):
        if not isinstance(other, Tournament):
            return NotImplemented
        if self._pos is not None and other._pos is not None:
            return self._pos == other._pos
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        if self._pos is not None:
            return f"Tournament.from_ranking({self.ranking!r})"
        return f"Tournament(<{self.n}x{self.n}>)"


@dataclass(frozen=True)
class LinearPreference:
    ranking: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranking", tuple(self.ranking))

    @property
    def top(self) -> int:
        return self.ranking[0]

    @cached_property
    def tournament(self) -> Tournament:
        return Tournament.from_ranking(self.ranking)


@dataclass(frozen=True, slots=True)
class Buyer:
    name: str
    rule: Rule
    direction: Direction
    preference: LinearPreference | Tournament
    threshold: int | None = None

    @property
    def tournament(self) -> Tournament:
        pref = self.preference
        return pref.tournament if isinstance(pref, LinearPreference) else pref


@dataclass(frozen=True)
class Instance:
    catalog: Catalog
    buyers: tuple[Buyer, ...] = ()
    target: Money | None = None

    def __post_init__(self):
        object.__setattr__(self, "buyers", tuple(self.buyers))
        if self.target is not None:
            object.__setattr__(self, "target", Money.of(self.target))

    @property
    def n(self) -> int:
        return len(self.catalog)

    @property
    def m(self) -> int:
        return len(self.buyers)

    def names_of(self, order: Iterable[int]) -> list[str]:
        return [self.catalog.names[i] for i in order]

    def list_from_names(self, names: Sequence[str]) -> tuple[int, ...]:
        idx = self.catalog.index
        unknown = [x for x in names if x not in idx]
        if unknown:
            raise InvalidInstance([f"unknown product {x}" for x in unknown])
        order = tuple(idx[x] for x in names)
        check_list(order, self.n)
        return order


# Name-level raw form: what a file or a caller supplies before validation.


@dataclass
class RawBuyer:
    name: str
    rule: str
    direction: str
    ranking: list[str] | None = None
    beats: list[tuple[str, str]] | None = None
    threshold: str | None = None


@dataclass
class RawInstance:
    products: list[tuple[str, Money]] = field(default_factory=list)
    buyers: list[RawBuyer] = field(default_factory=list)
    target: Money | None = None


def to_raw(inst: Instance) -> RawInstance:
    names = inst.catalog.names
    raw = RawInstance(list(zip(names, inst.catalog.profits)), [], inst.target)
    for b in inst.buyers:
        rb = RawBuyer(b.name, Rule(b.rule).value, Direction(b.direction).value)
        if isinstance(b.preference, LinearPreference):
            rb.ranking = [names[i] if 0 <= i < len(names) else f"#{i}" for i in b.preference.ranking]
        elif b.preference.n != len(names):
            rb.beats = []
            rb.ranking = [f"#{i}" for i in range(b.preference.n)]
        else:
            t = b.preference
            if t.is_ranked:
                rb.ranking = [names[i] for i in t.ranking]
            else:
                rb.beats = [(names[i], names[j]) for i in range(t.n) for j in range(t.n) if t.table[i, j]]
        if b.threshold is not None:
            rb.threshold = names[b.threshold] if 0 <= b.threshold < len(names) else f"#{b.threshold}"
        raw.buyers.append(rb)
    return raw


def validate_instance(raw: RawInstance | Instance) -> Instance:
    """Check every invariant and build the id-based instance.

    Raises InvalidInstance listing all violations with buyer/product names.
    """
    if isinstance(raw, Instance):
        raw = to_raw(raw)
    problems: list[str] = []
    names = [name for name, _ in raw.products]
    if not names:
        problems.append("catalog is empty")
    seen: set[str] = set()
    for name, profit in raw.products:
        if name in seen:
            problems.append(f"duplicate product name {name}")
        seen.add(name)
        if Money.of(profit).micros < 0:
            problems.append(f"negative profit for product {name}")
    index = {name: i for i, name in enumerate(names)}
    n = len(names)

    def resolve(token: str, where: str) -> int | None:
        if token not in index:
            problems.append(f"unknown product {token} ({where})")
            return None
        return index[token]

    buyers = []
    buyer_names: set[str] = set()
    for rb in raw.buyers:
        where = f"buyer {rb.name}"
        if rb.name in buyer_names:
            problems.append(f"duplicate buyer name {rb.name}")
        buyer_names.add(rb.name)
        try:
            rule = Rule(rb.rule)
        except ValueError:
            problems.append(f"{where}: unknown rule {rb.rule}")
            continue
        try:
            direction = Direction(rb.direction)
        except ValueError:
            problems.append(f"{where}: unknown direction {rb.direction}")
            continue
        pref = None
        if (rb.ranking is None) == (rb.beats is None):
            problems.append(f"{where}: needs exactly one preference block")
        elif rb.ranking is not None:
            ids = [resolve(x, where) for x in rb.ranking]
            if None not in ids:
                if sorted(ids) != list(range(n)):
                    dupes = sorted({names[i] for i in ids if ids.count(i) > 1})
                    missing = [names[i] for i in range(n) if i not in ids]
                    if dupes:
                        problems.append(f"{where}: ranking repeats {', '.join(dupes)}")
                    if missing:
                        problems.append(f"{where}: ranking misses {', '.join(missing)}")
                else:
                    lin = LinearPreference(tuple(ids))
                    pref = lin if rule is Rule.RC else lin.tournament
        else:
            if rule is Rule.RC:
                problems.append(f"{where}: rational buyers need a linear ranking")
            pairs = [(resolve(a, where), resolve(b, where)) for a, b in rb.beats]
            if all(a is not None and b is not None for a, b in pairs):
                t = Tournament.from_pairs(n, pairs)
                issues = t.problems(names)
                problems.extend(f"{where}: {msg}" for msg in issues)
                if not issues and rule is not Rule.RC:
                    pref = t
        threshold = None
        if rule is Rule.SAT:
            if rb.threshold is None:
                problems.append(f"{where}: satisficing buyer without threshold")
            else:
                threshold = resolve(rb.threshold, where)
        elif rb.threshold is not None:
            problems.append(f"{where}: threshold given for non-satisficing buyer")
        if pref is not None:
            buyers.append(Buyer(rb.name, rule, direction, pref, threshold))
    target = raw.target
    if problems:
        raise InvalidInstance(problems)
    return Instance(Catalog(tuple(names), tuple(p for _, p in raw.products)), tuple(buyers), target)


def check_list(order: Sequence[int], n: int) -> None:
    if len(order) != n or sorted(order) != list(range(n)):
        raise InvalidInstance([f"list is not a permutation of the {n} products"])


def evaluate_list(inst: Instance, order: Sequence[int]) -> Money:
    """Total profit of the products the buyers pick from the shelf `order`."""
    from .choice import choose

    check_list(order, inst.n)
    micros = inst.catalog.micros
    return Money(sum(micros[choose(b, order)] for b in inst.buyers))


# Restricted Betweenness source instances.


@dataclass(frozen=True)
class BetweennessInstance:
    """Elements U, V, w with constraints C = (u, v, u') and D = (v, u).

    A D pair (v, u) stands for the triple (v, w, u). The middle of each
    triple must sit strictly between its ends. D's V-element is bounded by
    |V| (the published index range bounds it by |U|, which reads as a typo).
    """

    U: tuple[str, ...]
    V: tuple[str, ...]
    w: str
    C: tuple[tuple[str, str, str], ...] = ()
    D: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "U", tuple(self.U))
        object.__setattr__(self, "V", tuple(self.V))
        object.__setattr__(self, "C", tuple(tuple(c) for c in self.C))
        object.__setattr__(self, "D", tuple(tuple(d) for d in self.D))

    @property
    def elements(self) -> tuple[str, ...]:
        return self.U + self.V + (self.w,)

    def triples(self) -> Iterator[tuple[str, str, str]]:
        yield from self.C
        for v, u in self.D:
            yield (v, self.w, u)


def validate_betweenness(inst: BetweennessInstance) -> BetweennessInstance:
    problems = []
    U, V = set(inst.U), set(inst.V)
    if len(U) != len(inst.U) or len(V) != len(inst.V):
        problems.append("duplicate element names")
    overlap = (U & V) | ({inst.w} & (U | V))
    if overlap:
        problems.append(f"U, V and w overlap on {', '.join(sorted(overlap))}")
    for a, b, c in inst.C:
        for x, group, label in ((a, U, "U"), (b, V, "V"), (c, U, "U")):
            if x not in group:
                problems.append(f"C ({a} {b} {c}): {x} is not in {label}")
        if a == c:
            problems.append(f"C ({a} {b} {c}): C endpoints must differ")
    for v, u in inst.D:
        if v not in V:
            problems.append(f"D ({v} {u}): {v} is not in V")
        if u not in U:
            problems.append(f"D ({v} {u}): {u} is not in U")
    if problems:
        raise InvalidInstance(problems)
    return inst
