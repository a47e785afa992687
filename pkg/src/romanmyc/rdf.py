"""Roman dominating functions and private-neighbourhood helpers."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, iter_bits, mask_of


class RDFError(ValueError):
    pass


@dataclass(frozen=True)
class RomanFunction:
    """Total assignment ``vertex -> {0, 1, 2}``; the partition is derived."""

    values: tuple[int, ...]

    def __post_init__(self):
        bad = [x for x in self.values if x not in (0, 1, 2)]
        if bad:
            raise RDFError(f"labels must be 0, 1 or 2, got {bad[0]!r}")

    @classmethod
    def from_sets(cls, n: int, v1: Iterable[int] = (), v2: Iterable[int] = ()) -> "RomanFunction":
        vals = [0] * n
        for v in v1:
            vals[v] = 1
        for v in v2:
            if vals[v]:
                raise RDFError(f"vertex {v} assigned both 1 and 2")
            vals[v] = 2
        return cls(tuple(vals))

    @classmethod
    def from_masks(cls, n: int, v1: int, v2: int) -> "RomanFunction":
        return cls.from_sets(n, iter_bits(v1), iter_bits(v2))

    @classmethod
    def from_string(cls, text: str, n: int | None = None) -> "RomanFunction":
        text = text.strip()
        bad = [c for c in text if c not in "012"]
        if bad:
            raise RDFError(f"unexpected character {bad[0]!r} in RDF string")
        if n is not None and len(text) != n:
            raise RDFError(f"RDF string has {len(text)} digits, graph has {n} vertices")
        return cls(tuple(int(c) for c in text))

    @property
    def n(self) -> int:
        return len(self.values)

    def level(self, i: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.values) if x == i)

    @property
    def v0(self) -> frozenset[int]:
        return self.level(0)

    @property
    def v1(self) -> frozenset[int]:
        return self.level(1)

    @property
    def v2(self) -> frozenset[int]:
        return self.level(2)

    def counts(self) -> tuple[int, int, int]:
        return tuple(self.values.count(i) for i in range(3))

    @property
    def weight(self) -> int:
        return sum(self.values)

    def mask(self, i: int) -> int:
        return mask_of(v for v, x in enumerate(self.values) if x == i)

    def __str__(self) -> str:
        return "".join(map(str, self.values))


def weight(f: RomanFunction) -> int:
    _, n1, n2 = f.counts()
    return 2 * n2 + n1


def _match(g: Graph, f: RomanFunction) -> None:
    if f.n != g.n:
        raise RDFError(f"function covers {f.n} vertices but graph has {g.n}")


def undefended(g: Graph, f: RomanFunction) -> list[int]:
    """Vertices labelled 0 with no neighbour labelled 2."""
    _match(g, f)
    twos = f.mask(2)
    return [v for v, x in enumerate(f.values) if x == 0 and not g.rows[v] & twos]


def is_rdf(g: Graph, f: RomanFunction) -> bool:
    return not undefended(g, f)


def _subset(g: Graph, vs: Iterable[int], what: str) -> int:
    m = mask_of(vs)
    if m >> g.n:
        raise GraphError(f"{what} contains a vertex outside 0..{g.n - 1}")
    return m


def _closed(g: Graph, mask: int) -> int:
    out = mask
    for v in iter_bits(mask):
        out |= g.rows[v]
    return out


def private_neighborhood(g: Graph, v: int, s: Iterable[int]) -> frozenset[int]:
    """N[v] - N[S - {v}]."""
    sm = _subset(g, s, "S")
    if not sm >> v & 1:
        raise RDFError(f"vertex {v} is not in S")
    rest = _closed(g, sm & ~(1 << v))
    return frozenset(iter_bits(g.closed_row(v) & ~rest))


def external_private_neighborhood(g: Graph, v: int, s: Iterable[int]) -> frozenset[int]:
    """N(v) - N[S - {v}]."""
    sm = _subset(g, s, "S")
    if not sm >> v & 1:
        raise RDFError(f"vertex {v} is not in S")
    rest = _closed(g, sm & ~(1 << v))
    return frozenset(iter_bits(g.rows[v] & ~rest))


def defends(g: Graph, w1: Iterable[int], w2: Iterable[int]) -> frozenset[int]:
    """Vertices secured by one legion on each of W1 and two on each of W2."""
    m1 = _subset(g, w1, "W1")
    m2 = _subset(g, w2, "W2")
    if m1 & m2:
        raise RDFError("W1 and W2 must be disjoint")
    return frozenset(iter_bits(m1 | _closed(g, m2)))


def v1_is_independent(g: Graph, f: RomanFunction) -> bool:
    _match(g, f)
    ones = f.mask(1)
    return all(not g.rows[v] & ones for v in iter_bits(ones))


def is_special(g: Graph, f: RomanFunction) -> bool:
    """V1 empty and every vertex of V2 has a neighbour in V2."""
    _match(g, f)
    if f.mask(1):
        return False
    twos = f.mask(2)
    return bool(twos) and all(g.rows[v] & twos for v in iter_bits(twos))


def parse_rdf(text: str, g: Graph | None = None) -> RomanFunction:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) != 1:
        raise RDFError(f"RDF file must hold exactly one line of digits, found {len(lines)}")
    return RomanFunction.from_string(lines[0], None if g is None else g.n)


def read_rdf(path: str | os.PathLike, g: Graph | None = None) -> RomanFunction:
    with open(path, encoding="utf-8") as fh:
        return parse_rdf(fh.read(), g)


def write_rdf(f: RomanFunction, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{f}\n")


def relabel(f: RomanFunction, perm: Sequence[int]) -> RomanFunction:
    vals = [0] * f.n
    for v, x in enumerate(f.values):
        vals[perm[v]] = x
    return RomanFunction(tuple(vals))
