"""Exact domination and Roman domination numbers with certificates.

``gamma_r`` uses the reduction: an optimal RDF is determined by its set of
2-labels ``S``, the 1-labels being exactly the vertices outside ``N[S]``,
so gamma_R(G) = min over S of 2|S| + |V - N[S]|.  ``gamma_r_naive`` is an
independent exhaustive scan over all 3^n labellings kept as an oracle.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import kernel
from .formulas import lower_bound_degree
from .graph import Graph, iter_bits, mask_of
from .kernel import SolverTimeout
from .rdf import RomanFunction, is_special, v1_is_independent

__all__ = [
    "SizeLimitError", "SolverTimeout", "SolverConfig", "SolveResult", "ClassifyResult",
    "gamma", "gamma_r", "gamma_r_naive", "gamma_r_subsets", "enumerate_gamma_r_witnesses",
    "min_dominating_sets", "classify", "lower_bound_degree",
]

NAIVE_CAP = 12
DEFAULT_MAX_N = 64


class SizeLimitError(ValueError):
    """Instance refused because it exceeds a configured size limit."""


@dataclass(frozen=True)
class SolverConfig:
    max_n: int = DEFAULT_MAX_N
    naive_cap: int = NAIVE_CAP
    time_limit_s: float | None = None
    backend: str | None = None

    def deadline(self) -> float | None:
        if self.time_limit_s is None:
            return None
        return time.monotonic() + self.time_limit_s


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: frozenset[int] | RomanFunction
    nodes: int = 0
    elapsed: float = 0.0
    backend: str = ""
    # Roman witnesses only: whether V1 induces an edgeless subgraph.
    v1_independent: bool | None = None


@dataclass(frozen=True)
class ClassifyResult:
    gamma: int
    gamma_r: int
    is_roman: bool
    is_special_roman: bool
    special_witness: RomanFunction | None = None
    gamma_result: SolveResult | None = field(default=None, compare=False, repr=False)
    gamma_r_result: SolveResult | None = field(default=None, compare=False, repr=False)


def _check_size(g: Graph, cfg: SolverConfig) -> None:
    if g.n < 1:
        raise SizeLimitError("graph has no vertices")
    if g.n > cfg.max_n:
        raise SizeLimitError(f"graph has {g.n} vertices, configured limit is {cfg.max_n}")


def _safe_roman_bound(g: Graph) -> int:
    # 2/(Delta+1) per vertex is only a valid share when Delta >= 1.
    if g.max_degree() == 0:
        return g.n
    return math.ceil(lower_bound_degree(g))


# -- relabelling into branching order --------------------------------------

@dataclass(frozen=True)
class _Ranked:
    order: tuple[int, ...]     # rank -> original vertex
    cn: tuple[int, ...]        # closed rows in rank labels

    def to_original(self, mask: int) -> int:
        return mask_of(self.order[r] for r in iter_bits(mask))

    def to_ranked(self, mask: int) -> int:
        rank = {v: r for r, v in enumerate(self.order)}
        return mask_of(rank[v] for v in iter_bits(mask))


def _ranked(g: Graph) -> _Ranked:
    """Vertices by descending degree, index as tiebreak."""
    order = tuple(sorted(range(g.n), key=lambda v: (-g.rows[v].bit_count(), v)))
    rank = {v: r for r, v in enumerate(order)}
    cn = tuple(mask_of(rank[w] for w in iter_bits(g.closed_row(v))) for v in order)
    return _Ranked(order, cn)


def _roman_cost(cn, s: int) -> int:
    covered = s
    for v in iter_bits(s):
        covered |= cn[v]
    return 2 * s.bit_count() + (len(cn) - covered.bit_count())


def _greedy_roman(cn) -> int:
    """Repeatedly label 2 the vertex defending most undefended vertices (gain >= 3)."""
    U = (1 << len(cn)) - 1
    s = 0
    while U:
        best_w, best_gain = -1, 2
        for w in range(len(cn)):
            gain = (cn[w] & U).bit_count()
            if gain > best_gain:
                best_w, best_gain = w, gain
        if best_w < 0:
            break
        s |= 1 << best_w
        U &= ~cn[best_w]
    return s


def _greedy_dom(cn) -> int:
    U = (1 << len(cn)) - 1
    s = 0
    while U:
        best_w = max(range(len(cn)), key=lambda w: ((cn[w] & U).bit_count(), -w))
        s |= 1 << best_w
        U &= ~cn[best_w]
    return s


def _roman_function(g: Graph, s: int) -> RomanFunction:
    covered = s
    for v in iter_bits(s):
        covered |= g.rows[v]
    return RomanFunction.from_masks(g.n, ((1 << g.n) - 1) & ~covered, s)


# -- public solvers --------------------------------------------------------

def gamma(g: Graph, config: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Domination number with a minimum dominating set as witness."""
    _check_size(g, config)
    t0 = time.perf_counter()
    rk = _ranked(g)
    name, mod = kernel.backend_for(g.n, config.backend)
    s0 = _greedy_dom(rk.cn)
    lower = math.ceil(g.n / (g.max_degree() + 1))
    value, s, nodes = mod.dom_min(rk.cn, s0.bit_count(), s0, lower, config.deadline())
    witness = frozenset(iter_bits(rk.to_original(s)))
    return SolveResult(value, witness, nodes, time.perf_counter() - t0, name)


def gamma_r(
    g: Graph,
    config: SolverConfig = DEFAULT_CONFIG,
    incumbent: frozenset[int] | None = None,
) -> SolveResult:
    """Roman domination number with an optimal RDF as witness.

    ``incumbent`` optionally seeds the search with a set of 2-labels (for
    example a minimum dominating set, giving the 2*gamma upper bound).
    """
    _check_size(g, config)
    t0 = time.perf_counter()
    rk = _ranked(g)
    name, mod = kernel.backend_for(g.n, config.backend)
    s0 = _greedy_roman(rk.cn)
    best = _roman_cost(rk.cn, s0)
    if incumbent is not None:
        s1 = rk.to_ranked(mask_of(incumbent))
        c1 = _roman_cost(rk.cn, s1)
        if c1 < best:
            s0, best = s1, c1
    value, s, nodes = mod.roman_min(rk.cn, best, s0, _safe_roman_bound(g), config.deadline())
    f = _roman_function(g, rk.to_original(s))
    assert f.weight == value
    return SolveResult(value, f, nodes, time.perf_counter() - t0, name, v1_is_independent(g, f))


def _naive_labellings(n: int, chunk_digits: int):
    """Yield blocks of all 3^n labellings in lexicographic order of their strings."""
    lead = max(0, n - chunk_digits)
    tail = n - lead
    if tail:
        tail_rows = np.array(np.unravel_index(np.arange(3 ** tail), (3,) * tail), dtype=np.int8).T
    else:
        tail_rows = np.zeros((1, 0), dtype=np.int8)
    for k in range(3 ** lead):
        head = np.array(np.unravel_index(k, (3,) * lead), dtype=np.int8) if lead else np.zeros(0, np.int8)
        block = np.empty((tail_rows.shape[0], n), dtype=np.int8)
        block[:, :lead] = head
        block[:, lead:] = tail_rows
        yield block


def gamma_r_naive(g: Graph, cap: int = NAIVE_CAP) -> SolveResult:
    """Exhaustive scan over every labelling V -> {0,1,2}.

    Witness is the lexicographically smallest optimal labelling.
    """
    if g.n < 1:
        raise SizeLimitError("graph has no vertices")
    if g.n > cap:
        raise SizeLimitError(f"naive oracle limited to {cap} vertices, graph has {g.n}")
    t0 = time.perf_counter()
    adj = np.zeros((g.n, g.n), dtype=np.int32)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1
    best, best_row, seen = None, None, 0
    for block in _naive_labellings(g.n, 10):
        twos = (block == 2).astype(np.int32)
        defended = (twos @ adj) > 0
        valid = np.all((block != 0) | defended, axis=1)
        seen += block.shape[0]
        if not valid.any():
            continue
        weights = np.where(valid, block.sum(axis=1, dtype=np.int32), np.iinfo(np.int32).max)
        i = int(np.argmin(weights))
        if best is None or weights[i] < best:
            best, best_row = int(weights[i]), block[i].copy()
    f = RomanFunction(tuple(int(x) for x in best_row))
    return SolveResult(best, f, seen, time.perf_counter() - t0, "naive", v1_is_independent(g, f))


def naive_optimal_functions(g: Graph, cap: int = NAIVE_CAP) -> list[RomanFunction]:
    """Every minimum-weight RDF, by exhaustive scan; lexicographic order."""
    if g.n > cap:
        raise SizeLimitError(f"naive oracle limited to {cap} vertices, graph has {g.n}")
    target = gamma_r_naive(g, cap).value
    adj = np.zeros((g.n, g.n), dtype=np.int32)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1
    out = []
    for block in _naive_labellings(g.n, 10):
        defended = ((block == 2).astype(np.int32) @ adj) > 0
        ok = np.all((block != 0) | defended, axis=1) & (block.sum(axis=1) == target)
        out.extend(RomanFunction(tuple(int(x) for x in row)) for row in block[ok])
    return out


def gamma_r_subsets(g: Graph, cap: int = 20) -> int:
    """min over S of 2|S| + |V - N[S]| by plain enumeration of all 2^n subsets."""
    if g.n > cap:
        raise SizeLimitError(f"subset scan limited to {cap} vertices, graph has {g.n}")
    cn = g.closed_rows()
    n = g.n
    cover = [0] * (1 << n)
    best = n
    for s in range(1, 1 << n):
        low = s & -s
        cover[s] = cover[s ^ low] | cn[low.bit_length() - 1]
        cost = 2 * s.bit_count() + n - cover[s].bit_count()
        if cost < best:
            best = cost
    return best


def enumerate_gamma_r_witnesses(
    g: Graph,
    budget: int = 10_000,
    config: SolverConfig = DEFAULT_CONFIG,
    value: int | None = None,
) -> list[RomanFunction]:
    """Distinct minimum-weight RDFs, at most ``budget``, sorted by their digit strings.

    The search stops after ``budget`` witnesses; call with ``budget + 1`` to
    learn whether the list is complete.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    _check_size(g, config)
    if value is None:
        value = gamma_r(g, config).value
    rk = _ranked(g)
    _, mod = kernel.backend_for(g.n, config.backend)
    found, _ = mod.roman_enum(rk.cn, value, budget, config.deadline())
    fs = [_roman_function(g, rk.to_original(s)) for s in found]
    return sorted(fs, key=str)


def min_dominating_sets(
    g: Graph,
    size: int,
    limit: int,
    no_isolated: bool = False,
    config: SolverConfig = DEFAULT_CONFIG,
) -> list[frozenset[int]]:
    """Dominating sets of exactly ``size`` vertices, ``size`` being gamma(G)."""
    _check_size(g, config)
    rk = _ranked(g)
    _, mod = kernel.backend_for(g.n, config.backend)
    found, _ = mod.dom_enum(rk.cn, size, limit, no_isolated, config.deadline())
    return sorted((frozenset(iter_bits(rk.to_original(s))) for s in found), key=sorted)


def classify(g: Graph, config: SolverConfig = DEFAULT_CONFIG) -> ClassifyResult:
    """Roman (gamma_R = 2 gamma) and special Roman classification.

    Special Roman is decided by searching the minimum dominating sets for one
    inducing a subgraph without isolated vertices (an optimal RDF with
    V1 empty is exactly such a set labelled 2).
    """
    gr = gamma(g, config)
    rr = gamma_r(g, config, incumbent=gr.witness)
    is_roman = rr.value == 2 * gr.value
    witness = None
    if is_roman:
        sets = min_dominating_sets(g, gr.value, 1, no_isolated=True, config=config)
        if sets:
            witness = RomanFunction.from_sets(g.n, (), sets[0])
            assert is_special(g, witness)
    return ClassifyResult(gr.value, rr.value, is_roman, witness is not None, witness, gr, rr)
