"""Simple undirected graphs stored as per-vertex neighbour bit rows.

Vertices are always ``0..n-1``.  Row ``v`` is a Python ``int`` whose bit
``w`` is set iff ``vw`` is an edge.  Products and Mycielskians use the flat
layouts documented on :func:`cartesian_product` and :class:`MycielskiLayout`.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# Generators and readers refuse anything bigger; the solvers are exponential.
MAX_VERTICES = 512


class GraphError(ValueError):
    """Invalid graph input (bad endpoint, self-loop, malformed file, ...)."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    edge_count: int

    def __post_init__(self):
        if self.n < 0 or self.n > MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match n")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for w in iter_bits(row):
                if not self.rows[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
            total += row.bit_count()
        if total != 2 * self.edge_count:
            raise GraphError("edge_count inconsistent with rows")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        rows = tuple(rows)
        return cls(len(rows), rows, sum(r.bit_count() for r in rows) // 2)

    # -- queries -----------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(iter_bits(self.rows[v]))

    def closed_row(self, v: int) -> int:
        return self.rows[v] | (1 << v)

    def closed_rows(self) -> tuple[int, ...]:
        return tuple(r | (1 << v) for v, r in enumerate(self.rows))

    def degree(self, v: int) -> int:
        self._check(v)
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_k_regular(self, k: int) -> bool:
        return all(d == k for d in self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u]) if v > u]

    def open_neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        m = 0
        for v in vertices:
            self._check(v)
            m |= self.rows[v]
        return frozenset(iter_bits(m))

    def closed_neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        m = 0
        for v in vertices:
            self._check(v)
            m |= self.rows[v] | (1 << v)
        return frozenset(iter_bits(m))

    def induced_has_isolated(self, vertices: Iterable[int]) -> bool:
        """True if some vertex of the set has no neighbour inside the set."""
        vs = list(vertices)
        s = mask_of(vs)
        return any(not self.rows[v] & s for v in vs)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            rows[perm[v]] = mask_of(perm[w] for w in iter_bits(row))
        return Graph(self.n, tuple(rows), self.edge_count)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, collapsing duplicate and reversed pairs."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph.from_rows(rows)


# -- named families --------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph.from_rows([full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n}: hub 0 joined to leaves 1..n."""
    if n < 1:
        raise GraphError("star needs n >= 1 leaves")
    return new_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return Graph.from_rows([0] * n)


def part_ranges(parts: Sequence[int]) -> list[range]:
    """Vertex ranges of the parts of a complete multipartite graph, in order."""
    out, start = [], 0
    for p in parts:
        out.append(range(start, start + p))
        start += p
    return out


def complete_multipartite_graph(parts: Sequence[int]) -> Graph:
    """Parts occupy consecutive vertex ranges in the order given."""
    if not parts or any(p < 1 for p in parts):
        raise GraphError("complete multipartite graph needs part sizes >= 1")
    n = sum(parts)
    full = (1 << n) - 1
    rows = [0] * n
    for r in part_ranges(parts):
        own = mask_of(r)
        for v in r:
            rows[v] = full & ~own
    return Graph.from_rows(rows)


# 1-based labels 1..10, converted below.
_PETERSEN_EDGES_1BASED = [(i, i + 1) for i in range(1, 10)] + [
    (6, 10), (1, 5), (1, 9), (2, 7), (3, 10), (4, 8),
]


def petersen_graph() -> Graph:
    return new_graph(10, [(u - 1, v - 1) for u, v in _PETERSEN_EDGES_1BASED])


def _multipartite_params(*parts):
    if len(parts) == 1 and not isinstance(parts[0], int):
        parts = tuple(parts[0])
    return complete_multipartite_graph(parts)


_FAMILIES = {
    "complete": complete_graph,
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "empty": empty_graph,
    "complete_multipartite": _multipartite_params,
    "petersen": petersen_graph,
}

FAMILIES = tuple(_FAMILIES)


def generate(family: str, *params) -> Graph:
    """Named graph by family name, e.g. ``generate("cycle", 5)``.

    ``complete_multipartite`` takes the part sizes either as separate
    arguments or as one sequence; ``petersen`` takes nothing.
    """
    try:
        build = _FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {family}: {params!r}") from exc


# -- operations ------------------------------------------------------------

def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex ``(a, b)`` stored at ``a * h.n + b``."""
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product needs nonempty factors")
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise GraphError(f"product has {n} vertices, limit is {MAX_VERTICES}")
    rows = [0] * n
    for a in range(g.n):
        base = a * h.n
        for b in range(h.n):
            row = h.rows[b] << base
            for a2 in iter_bits(g.rows[a]):
                row |= 1 << (a2 * h.n + b)
            rows[base + b] = row
    return Graph.from_rows(rows)


@dataclass(frozen=True)
class MycielskiLayout:
    """Flat ids of mu_m(G): layer ``i`` copy of base vertex ``j`` is
    ``i * base_n + j`` for ``i`` in ``0..m``; the apex is ``(m + 1) * base_n``.
    """

    base_n: int
    m: int

    @property
    def n(self) -> int:
        return (self.m + 1) * self.base_n + 1

    @property
    def apex(self) -> int:
        return (self.m + 1) * self.base_n

    def vertex(self, layer: int, j: int) -> int:
        if not 0 <= layer <= self.m:
            raise GraphError(f"layer {layer} outside 0..{self.m}")
        if not 0 <= j < self.base_n:
            raise GraphError(f"base vertex {j} outside 0..{self.base_n - 1}")
        return layer * self.base_n + j

    def is_apex(self, v: int) -> bool:
        return v == self.apex

    def layer(self, v: int) -> int | None:
        """Layer of ``v``, or None for the apex."""
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return None if v == self.apex else v // self.base_n

    def base(self, v: int) -> int:
        if self.is_apex(v):
            raise GraphError("the apex has no base vertex")
        return v % self.base_n

    def layer_vertices(self, layer: int) -> range:
        start = self.vertex(layer, 0)
        return range(start, start + self.base_n)

    def lift(self, layer: int, base_vertices: Iterable[int]) -> list[int]:
        return [self.vertex(layer, j) for j in base_vertices]


def mycielskian(g: Graph, m: int = 1) -> tuple[Graph, MycielskiLayout]:
    """Generalised Mycielskian mu_m(G).

    Layer 0 keeps G's edges; layer ``i`` and ``i+1`` are joined along every
    edge of G (both orientations); the apex is joined to all of layer ``m``.
    """
    if m < 1:
        raise GraphError("Mycielskian order m must be >= 1")
    if g.n < 1:
        raise GraphError("Mycielskian needs a nonempty base graph")
    lay = MycielskiLayout(g.n, m)
    if lay.n > MAX_VERTICES:
        raise GraphError(f"mu_{m} has {lay.n} vertices, limit is {MAX_VERTICES}")
    n0 = g.n
    rows = [0] * lay.n
    for j in range(n0):
        rows[j] = g.rows[j]
    for i in range(m):
        for j in range(n0):
            lo, hi = i * n0 + j, (i + 1) * n0 + j
            rows[lo] |= g.rows[j] << ((i + 1) * n0)
            rows[hi] |= g.rows[j] << (i * n0)
    apex = lay.apex
    for j in lay.layer_vertices(m):
        rows[j] |= 1 << apex
        rows[apex] |= 1 << j
    return Graph.from_rows(rows), lay


# -- edge-list text format -------------------------------------------------

def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphError("empty edge list: missing 'n m' header") from None
    if len(header) != 2:
        raise GraphError(f"line {lineno}: header must be 'n m', got {' '.join(header)!r}")
    n, m = (_int_token(t, lineno) for t in header)
    edges = []
    for lineno, toks in lines:
        if len(toks) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {' '.join(toks)!r}")
        u, v = (_int_token(t, lineno) for t in toks)
        if not (0 <= u < n and 0 <= v < n):
            bad = u if not 0 <= u < n else v
            raise GraphError(f"line {lineno}: vertex {bad} outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop {u} {v}")
        edges.append((u, v))
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges but {len(edges)} were listed")
    g = new_graph(n, edges)
    if g.edge_count != m:
        raise GraphError(f"edge list has duplicate edges ({m} listed, {g.edge_count} distinct)")
    return g


def format_edge_list(g: Graph) -> str:
    buf = io.StringIO()
    buf.write(f"{g.n} {g.edge_count}\n")
    for u, v in g.edges():
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
