"""Line-oriented text formats for instances and betweenness problems.

Instance file::

    shelflist v1
    product a 1.5
    product b 3
    buyer ann sat L
    rank b a
    threshold a
    buyer bob sc R
    beats a b
    target 4

Betweenness file::

    betweenness v1
    U u1 u2
    V v1
    W w
    C u1 v1 u2
    D v1 u1        # stands for the triple (v1, w, u1)
"""

from __future__ import annotations

from itertools import combinations

from .core import (
    BetweennessInstance,
    Instance,
    InvalidInstance,
    Money,
    RawBuyer,
    RawInstance,
    validate_betweenness,
    validate_instance,
)

INSTANCE_HEADER = "shelflist v1"
BETWEENNESS_HEADER = "betweenness v1"


class ParseError(InvalidInstance):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__([f"line {lineno}: {message}"])


def _lines(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def _expect(header: str, lines) -> None:
    first = next(lines, None)
    if first is None or " ".join(first[1]) != header:
        raise ParseError(first[0] if first else 1, f"expected header {header!r}")


def parse_raw_instance(text: str) -> RawInstance:
    lines = _lines(text)
    _expect(INSTANCE_HEADER, lines)
    raw = RawInstance()
    buyer: RawBuyer | None = None
    for lineno, tokens in lines:
        key, args = tokens[0], tokens[1:]
        if key == "product":
            if buyer is not None:
                raise ParseError(lineno, "products must precede buyers")
            if len(args) != 2:
                raise ParseError(lineno, "usage: product <name> <profit>")
            try:
                raw.products.append((args[0], Money.parse(args[1])))
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
        elif key == "buyer":
            if len(args) != 3:
                raise ParseError(lineno, "usage: buyer <name> <rc|sat|sc> <L|R>")
            if args[1] not in ("rc", "sat", "sc"):
                raise ParseError(lineno, f"unknown rule {args[1]!r}")
            if args[2] not in ("L", "R"):
                raise ParseError(lineno, f"unknown direction {args[2]!r}")
            buyer = RawBuyer(*args)
            raw.buyers.append(buyer)
        elif key in ("rank", "beats", "threshold"):
            if buyer is None:
                raise ParseError(lineno, f"{key} outside a buyer block")
            if key == "rank":
                if buyer.ranking is not None or buyer.beats is not None:
                    raise ParseError(lineno, f"second preference block for buyer {buyer.name}")
                if not args:
                    raise ParseError(lineno, "usage: rank <name...>")
                buyer.ranking = list(args)
            elif key == "beats":
                if buyer.ranking is not None:
                    raise ParseError(lineno, f"second preference block for buyer {buyer.name}")
                if len(args) != 2:
                    raise ParseError(lineno, "usage: beats <winner> <loser>")
                if buyer.beats is None:
                    buyer.beats = []
                buyer.beats.append((args[0], args[1]))
            else:
                if len(args) != 1:
                    raise ParseError(lineno, "usage: threshold <product>")
                if buyer.threshold is not None:
                    raise ParseError(lineno, f"second threshold for buyer {buyer.name}")
                buyer.threshold = args[0]
        elif key == "target":
            if len(args) != 1:
                raise ParseError(lineno, "usage: target <amount>")
            if raw.target is not None:
                raise ParseError(lineno, "second target line")
            try:
                raw.target = Money.parse(args[0])
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
        else:
            raise ParseError(lineno, f"unknown keyword {key!r}")
    return raw


def parse_instance(text: str) -> Instance:
    return validate_instance(parse_raw_instance(text))


def serialize_instance(inst: Instance) -> str:
    names = inst.catalog.names
    out = [INSTANCE_HEADER]
    for name, profit in zip(names, inst.catalog.profits):
        out.append(f"product {name} {profit}")
    for b in inst.buyers:
        out.append(f"buyer {b.name} {b.rule.value} {b.direction.value}")
        pref = b.preference
        ranking = pref.ranking
        if ranking is not None:
            out.append("rank " + " ".join(names[i] for i in ranking))
        else:
            for i, j in combinations(range(len(names)), 2):
                w, l = (i, j) if pref.beats(i, j) else (j, i)
                out.append(f"beats {names[w]} {names[l]}")
        if b.threshold is not None:
            out.append(f"threshold {names[b.threshold]}")
    if inst.target is not None:
        out.append(f"target {inst.target}")
    return "\n".join(out) + "\n"


def parse_betweenness(text: str) -> BetweennessInstance:
    lines = _lines(text)
    _expect(BETWEENNESS_HEADER, lines)
    U = V = w = None
    C, D = [], []
    for lineno, tokens in lines:
        key, args = tokens[0], tokens[1:]
        if key in ("U", "V"):
            if (U if key == "U" else V) is not None:
                raise ParseError(lineno, f"second {key} line")
            if key == "U":
                U = tuple(args)
            else:
                V = tuple(args)
        elif key == "W":
            if w is not None or len(args) != 1:
                raise ParseError(lineno, "usage: W <name> (once)")
            w = args[0]
        elif key == "C":
            if len(args) != 3:
                raise ParseError(lineno, "usage: C <u> <v> <u>")
            if args[0] == args[2]:
                raise ParseError(lineno, "C endpoints must differ")
            C.append(tuple(args))
        elif key == "D":
            if len(args) != 2:
                raise ParseError(lineno, "usage: D <v> <u>")
            D.append(tuple(args))
        else:
            raise ParseError(lineno, f"unknown keyword {key!r}")
    if U is None or V is None or w is None:
        raise ParseError(1, "U, V and W lines are required")
    return validate_betweenness(BetweennessInstance(U, V, w, tuple(C), tuple(D)))


def serialize_betweenness(inst: BetweennessInstance) -> str:
    out = [BETWEENNESS_HEADER, " ".join(["U", *inst.U]), " ".join(["V", *inst.V]), f"W {inst.w}"]
    out += [f"C {a} {b} {c}" for a, b, c in inst.C]
    out += [f"D {v} {u}" for v, u in inst.D]
    return "\n".join(out) + "\n"

