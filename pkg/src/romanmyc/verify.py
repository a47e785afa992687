"""Exact-solver verification of the closed forms, bounds and constructions.

:func:`build_corpus` produces a deterministic list of :class:`Instance`
values; :func:`run_suite` solves each one exactly (within size and time
caps) and resolves every attached claim to a :class:`Verdict`.

Only claims stated for *all* graphs (and internal consistency checks) are
``universal``; a failing universal verdict fails the suite.  Family-specific
formula mismatches are findings, reported but not fatal.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Iterable

from . import formulas as F
from .constructions import CONSTRUCTIONS
from .graph import (
    Graph,
    cartesian_product,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    empty_graph,
    mycielskian,
    new_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from .rdf import RomanFunction, external_private_neighborhood, is_rdf, undefended
from .solver import (
    SizeLimitError,
    SolverConfig,
    SolverTimeout,
    classify,
    enumerate_gamma_r_witnesses,
    gamma_r,
    gamma_r_naive,
)

MATCH = "MATCH"
MISMATCH = "MISMATCH"
BOUND_HOLDS = "BOUND_HOLDS"
BOUND_VIOLATED = "BOUND_VIOLATED"
CONSTRUCTION_VALID = "CONSTRUCTION_VALID"
CONSTRUCTION_INVALID = "CONSTRUCTION_INVALID"
SKIPPED = "SKIPPED"
STATUSES = (MATCH, MISMATCH, BOUND_HOLDS, BOUND_VIOLATED, CONSTRUCTION_VALID, CONSTRUCTION_INVALID, SKIPPED)
FAILING = {MISMATCH, BOUND_VIOLATED, CONSTRUCTION_INVALID}

SCHEMA = "romanmyc.verification/1"


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 1729
    naive_cap: int = 12
    exact_cap: int = 25
    mu_order: int = 8
    pair_cap: int = 10
    random_count: int = 40
    random_max_n: int = 10
    witness_budget: int = 10_000
    time_limit_s: float = 60.0
    jobs: int = 1
    backend: str | None = None


@dataclass(frozen=True)
class Claim:
    """One checkable statement about an instance.

    kind: ``value`` (exact gamma_R), ``special`` / ``roman`` (classification,
    ``expect`` holds the stated answer) or ``construction`` (``build`` is
    ``(name, args, kwargs)`` into the constructions registry).  ``on`` is
    ``"G"`` or ``"mu1"`` for claims about mu_1 of the instance graph.
    """

    tag: str
    kind: str
    prediction: F.Prediction | None = None
    expect: bool | None = None
    build: tuple | None = None
    on: str = "G"
    universal: bool = False


@dataclass(frozen=True)
class Instance:
    key: str
    family: str
    params: str
    graph: Graph
    claims: tuple[Claim, ...] = ()
    pair: bool = False


@dataclass(frozen=True)
class Verdict:
    tag: str
    status: str
    target: str = "G"
    exact: int | None = None
    predicted: str | None = None
    weight: int | None = None
    detail: str = ""
    universal: bool = False
    kind: str = "check"

    @property
    def violated(self) -> bool:
        return self.universal and self.status in FAILING


@dataclass
class InstanceReport:
    key: str
    family: str
    params: str
    n: int
    edges: int
    gamma: int | None = None
    gamma_r: int | None = None
    is_roman: bool | None = None
    is_special_roman: bool | None = None
    v1_independent: bool | None = None
    mu1_n: int | None = None
    mu1_gamma_r: int | None = None
    skipped: str | None = None
    elapsed: float = 0.0
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def difference(self) -> int | None:
        if self.mu1_gamma_r is None or self.gamma_r is None:
            return None
        return self.mu1_gamma_r - self.gamma_r


@dataclass
class VerificationReport:
    config: VerifyConfig
    instances: list[InstanceReport]

    def verdicts(self) -> Iterable[tuple[InstanceReport, Verdict]]:
        for inst in self.instances:
            for v in inst.verdicts:
                yield inst, v

    @property
    def violations(self) -> list[tuple[InstanceReport, Verdict]]:
        return [(i, v) for i, v in self.verdicts() if v.violated]

    @property
    def failed(self) -> bool:
        return bool(self.violations)

    def counts(self) -> dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for _, v in self.verdicts():
            out[v.status] += 1
        return out

    def instance(self, key: str) -> InstanceReport:
        for inst in self.instances:
            if inst.key == key:
                return inst
        raise KeyError(key)

    def arbitrations(self) -> list[dict[str, Any]]:
        """Instances where exact formulas disagree; the solved value decides."""
        out = []
        for inst in self.instances:
            rivals = [v for v in inst.verdicts if v.kind == "value" and v.status in (MATCH, MISMATCH)]
            if len({v.predicted for v in rivals}) < 2 or inst.gamma_r is None:
                continue
            out.append({
                "instance": inst.key,
                "exact": inst.gamma_r,
                "claims": [{"tag": v.tag, "predicted": v.predicted, "status": v.status} for v in rivals],
                "winners": [v.tag for v in rivals if v.status == MATCH],
            })
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "config": asdict(self.config),
            "summary": {
                "instances": len(self.instances),
                "counts": self.counts(),
                "universal_violations": len(self.violations),
                "failed": self.failed,
            },
            "arbitrations": self.arbitrations(),
            "instances": [_instance_dict(i) for i in self.instances],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = []
        for inst in self.instances:
            head = f"{inst.key}  n={inst.n} m={inst.edges}"
            if inst.gamma_r is not None:
                head += (f"  gamma={inst.gamma} gamma_R={inst.gamma_r}"
                         f" roman={_yn(inst.is_roman)} special={_yn(inst.is_special_roman)}")
            if inst.mu1_gamma_r is not None:
                head += f"  gamma_R(mu)={inst.mu1_gamma_r} (+{inst.difference})"
            if inst.skipped:
                head += f"  [skipped: {inst.skipped}]"
            lines.append(f"{head}  [{inst.elapsed:.2f}s]")
            for v in inst.verdicts:
                parts = [f"  {v.status:<20} {v.tag}"]
                if v.target != "G":
                    parts.append(f"on {v.target}")
                if v.exact is not None:
                    parts.append(f"exact={v.exact}")
                if v.predicted is not None:
                    parts.append(f"predicted={v.predicted}")
                if v.weight is not None:
                    parts.append(f"weight={v.weight}")
                if v.detail:
                    parts.append(f"({v.detail})")
                if v.violated:
                    parts.append("<-- UNIVERSAL CLAIM VIOLATED")
                lines.append(" ".join(parts))
        lines.append("")
        lines.append("arbitrations:")
        for a in self.arbitrations():
            claims = ", ".join(f"{c['tag']} predicted {c['predicted']} {c['status']}" for c in a["claims"])
            verdict = ", ".join(a["winners"]) if a["winners"] else "neither formula holds"
            lines.append(f"  {a['instance']}: exact {a['exact']}; {claims} -> {verdict}")
        c = self.counts()
        lines.append("")
        lines.append(f"summary: {len(self.instances)} instances; "
                     + ", ".join(f"{k}={v}" for k, v in c.items() if v))
        lines.append(f"universal violations: {len(self.violations)}"
                     + ("  -> SUITE FAILED" if self.failed else "  -> suite passed"))
        return "\n".join(lines) + "\n"


def _yn(b: bool | None) -> str:
    return "?" if b is None else ("yes" if b else "no")


def _instance_dict(inst: InstanceReport) -> dict[str, Any]:
    d = {k: v for k, v in asdict(inst).items() if k != "verdicts"}
    d["difference"] = inst.difference
    d["verdicts"] = [asdict(v) for v in inst.verdicts]
    return d


# -- corpus ----------------------------------------------------------------

def _value(pred: F.Prediction, on: str = "G") -> Claim | None:
    return Claim(pred.source, "value", prediction=pred, on=on) if pred.applies else None


def _construct(tag: str, name: str, *args, on: str = "G", universal: bool = False, **kwargs) -> Claim:
    return Claim(tag, "construction", build=(name, args, kwargs), on=on, universal=universal)


def _plus_two(family_value: int | None = None) -> list[Claim]:
    """Claims for the named non-special families."""
    out = [Claim("named_family_not_special", "special", expect=False)]
    if family_value is not None:
        out.append(Claim("named_family_value", "value", prediction=F.Prediction("named_family_value", family_value, family_value)))
    return out


def _inst(key, family, params, graph, claims, cfg, pair=None):
    claims = [c for c in claims if c is not None]
    if graph.n > cfg.exact_cap:
        # only constructions are checkable without an exact solve
        claims = [c for c in claims if c.kind == "construction"]
    if pair is None:
        pair = graph.n <= cfg.pair_cap
    pair = pair and 2 * graph.n + 1 <= cfg.exact_cap
    claims = tuple(claims)
    return Instance(key, family, params, graph, claims, pair)


def _random_graphs(cfg: VerifyConfig) -> list[Instance]:
    rng = random.Random(cfg.seed)
    out = []
    for i in range(cfg.random_count):
        n = rng.randint(1, cfg.random_max_n)
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        g = new_graph(n, edges)
        out.append(_inst(f"random/{i:03d}", "random", f"n={n},p=1/2,seed={cfg.seed}", g, [], cfg))
    return out


def multipartite_shapes(max_parts: int = 4, max_total: int = 11) -> list[tuple[int, ...]]:
    out = []
    for p in range(2, max_parts + 1):
        for parts in itertools.combinations_with_replacement(range(1, max_total + 1), p):
            if sum(parts) <= max_total:
                out.append(parts)
    return out


MU_BASES = {
    "K3,3": lambda: complete_multipartite_graph([3, 3]),
    "P2xK4": lambda: cartesian_product(path_graph(2), complete_graph(4)),
    "P2xK1,2": lambda: cartesian_product(path_graph(2), star_graph(2)),
    "P2xK4,4": lambda: cartesian_product(path_graph(2), complete_multipartite_graph([4, 4])),
}


def _family_mu_prediction(base: str, m: int) -> F.Prediction:
    if base == "K3,3":
        return F.mu_m_multipartite(m)
    if base in ("P2xK4", "P2xK1,2"):
        return F.mu_m_cart1(2, m)
    return F.mu_m_cart2(2, m)


def _mycielski_instances(cfg: VerifyConfig) -> list[Instance]:
    out = []
    for name, make in MU_BASES.items():
        base = make()
        c = classify(base, SolverConfig(backend=cfg.backend))
        if not c.is_special_roman:
            raise AssertionError(f"{name} expected to be special Roman")
        f = c.special_witness
        max_m = cfg.mu_order if name != "P2xK4,4" else min(cfg.mu_order, 4)
        for m in range(1, max_m + 1):
            h, _ = mycielskian(base, m)
            claims = [
                _value(F.mu_m_special(c.gamma_r, m)),
                _value(_family_mu_prediction(name, m)),
                _construct("mu_m_construction", "mu_m", base, f, m, universal=True),
            ]
            if m % 4 == 1:
                claims.append(_construct("mu_m_construction_as_printed", "mu_m", base, f, m, as_printed=True))
            out.append(_inst(f"mu_m/{name}/m={m}", "mycielskian", f"base={name},m={m}", h, claims, cfg, pair=False))
    return out


def build_corpus(config: VerifyConfig = VerifyConfig()) -> list[Instance]:
    """Deterministic corpus of catalog families, Mycielskians and random graphs."""
    cfg = config
    out: list[Instance] = []

    for n in range(1, 9):
        out.append(_inst(f"complete/n={n:02d}", "complete", f"n={n}", complete_graph(n), _plus_two(2), cfg))
    for n in range(1, 13):
        out.append(_inst(f"path/n={n:02d}", "path", f"n={n}", path_graph(n),
                         [_value(F.path(n)), _construct("path_cycle_construction", "path_cycle", n, "path")]
                         + _plus_two(), cfg))
    for n in range(3, 13):
        out.append(_inst(f"cycle/n={n:02d}", "cycle", f"n={n}", cycle_graph(n),
                         [_value(F.cycle(n)), _construct("path_cycle_construction", "path_cycle", n, "cycle")]
                         + _plus_two(), cfg))
    for n in range(1, 10):
        out.append(_inst(f"star/n={n:02d}", "star", f"n={n}", star_graph(n), _plus_two(2), cfg))
    for n in range(1, 7):
        out.append(_inst(f"empty/n={n:02d}", "empty", f"n={n}", empty_graph(n),
                         [Claim("edgeless_value", "value", prediction=F.Prediction("edgeless_value", n, n)),
                          _construct("edgeless_construction", "empty", n)], cfg))

    for parts in multipartite_shapes():
        g = complete_multipartite_graph(parts)
        claims = [
            _value(F.multipartite(parts)),
            _construct("multipartite_construction", "multipartite", parts),
            Claim("multipartite_roman_iff_no_part_of_two", "roman", expect=2 not in parts),
        ]
        if parts[0] == 2:
            claims += _plus_two(3)
        if parts[0] >= 3:
            claims.append(Claim("multipartite_special", "special", expect=True))
        out.append(_inst(f"multipartite/{'-'.join(f'{p:02d}' for p in parts)}", "complete_multipartite",
                         f"parts={list(parts)}", g, claims, cfg))

    for kind, lo in (("path", 1), ("cycle", 3)):
        line = path_graph if kind == "path" else cycle_graph
        pred = F.pt_kn if kind == "path" else F.ct_kn
        for t in range(lo, 8):
            g = cartesian_product(line(t), complete_graph(3))
            out.append(_inst(f"{kind}xK3/t={t}", f"{kind}xK_n", f"t={t},n=3", g,
                             [_value(pred(t, 3)), _construct("prism_k3_construction", "prism_k3", t, kind)], cfg))
        for n in (4, 5):
            for t in range(lo, 5):
                g = cartesian_product(line(t), complete_graph(n))
                claims = [_value(pred(t, n)), _construct("prism_kn_construction", "prism_kn", t, n, kind)]
                if t >= 2:
                    claims.append(Claim("grid_special", "special", expect=True))
                out.append(_inst(f"{kind}xK{n}/t={t}", f"{kind}xK_n", f"t={t},n={n}", g, claims, cfg))

    for t, parts in ((2, (4, 4)), (3, (4, 4)), (2, (4, 5)), (2, (4, 4, 4))):
        g = cartesian_product(path_graph(t), complete_multipartite_graph(parts))
        out.append(_inst(f"pathxKmulti/t={t},parts={'-'.join(map(str, parts))}", "path_x_multipartite",
                         f"t={t},parts={list(parts)}", g,
                         [_value(F.pt_multipartite(t, parts)),
                          _construct("path_multipartite_construction", "path_multipartite", t, parts),
                          Claim("grid_special", "special", expect=True)], cfg))
    for t in range(1, 5):
        for n in range(2, 5):
            g = cartesian_product(path_graph(t), star_graph(n))
            claims = [_value(F.pt_star(t, n)), _construct("path_star_construction", "path_star", t, n)]
            if t >= 2:
                claims.append(Claim("grid_special", "special", expect=True))
            out.append(_inst(f"pathxK1,n/t={t},n={n}", "path_x_star", f"t={t},n={n}", g, claims, cfg))

    pet = petersen_graph()
    out.append(_inst("petersen", "petersen", "", pet,
                     [_value(F.petersen()), _construct("petersen_construction", "petersen"),
                      Claim("petersen_roman", "roman", expect=True)] + _plus_two(), cfg, pair=True))

    out += _mycielski_instances(cfg)
    out += _random_graphs(cfg)
    return sorted(out, key=lambda i: i.key)


# -- evaluation ------------------------------------------------------------

class _Clock:
    def __init__(self, cfg: VerifyConfig):
        self.cfg = cfg
        self.end = time.monotonic() + cfg.time_limit_s

    def solver(self) -> SolverConfig:
        left = self.end - time.monotonic()
        if left <= 0:
            raise SolverTimeout("instance time limit exhausted")
        return SolverConfig(max_n=self.cfg.exact_cap, naive_cap=self.cfg.naive_cap,
                            time_limit_s=left, backend=self.cfg.backend)


def _compare(tag: str, exact: int, pred: F.Prediction, target: str = "G", universal: bool = False) -> Verdict:
    ok = pred.contains(exact)
    if pred.is_exact:
        return Verdict(tag, MATCH if ok else MISMATCH, target, exact, str(pred.lo), universal=universal)
    return Verdict(tag, BOUND_HOLDS if ok else BOUND_VIOLATED, target, exact,
                   f"[{pred.lo}, {pred.hi}]", universal=universal)


def _bool(tag: str, ok: bool, detail: str = "", target: str = "G", universal: bool = True,
          exact: int | None = None) -> Verdict:
    return Verdict(tag, MATCH if ok else MISMATCH, target, exact, detail=detail, universal=universal)


def _bound(tag: str, ok: bool, exact: int, predicted: str, target: str = "G") -> Verdict:
    return Verdict(tag, BOUND_HOLDS if ok else BOUND_VIOLATED, target, exact, predicted, universal=True)


def _skip(claim: Claim, why: str) -> Verdict:
    return Verdict(claim.tag, SKIPPED, "mu_1(G)" if claim.on == "mu1" else "G", detail=why,
                   universal=claim.universal)


def _check_construction(claim: Claim, target: Graph, exact: int | None, label: str) -> list[Verdict]:
    name, args, kwargs = claim.build
    out = CONSTRUCTIONS[name](*args, **kwargs)
    if out.graph != target:
        return [_bool("internal:construction_target", False, f"{claim.tag} built a different graph", label)]
    bad = undefended(out.graph, out.function)
    if bad:
        return [Verdict(claim.tag, CONSTRUCTION_INVALID, label, exact, weight=out.claimed_weight,
                        detail=f"vertex {bad[0]} undefended ({len(bad)} total); f={out.function}",
                        universal=claim.universal)]
    res = [Verdict(claim.tag, CONSTRUCTION_VALID, label, weight=out.claimed_weight, universal=claim.universal)]
    if exact is not None:
        w = out.claimed_weight
        if w < exact:
            res.append(_bool("internal:construction_not_below_optimum", False, f"weight {w} < gamma_R {exact}",
                             label, exact=exact))
        else:
            res.append(Verdict(f"{claim.tag}:weight_vs_exact", MATCH if w == exact else MISMATCH, label,
                               exact, str(w), w, "" if w == exact else f"construction exceeds optimum by {w - exact}"))
    return res


def _intrinsic(g: Graph, c, rep: InstanceReport, clock: _Clock, cfg: VerifyConfig) -> list[Verdict]:
    """Checks that hold for every graph: witnesses, oracle, bounds."""
    vs = []
    gr, gm = c.gamma_r_result, c.gamma_result
    f = gr.witness
    vs.append(_bool("internal:gamma_r_witness", is_rdf(g, f) and f.weight == gr.value, f"witness {f}"))
    dominated = g.closed_neighborhood(gm.witness) == frozenset(g.vertices)
    vs.append(_bool("internal:gamma_witness", dominated and len(gm.witness) == gm.value,
                    f"witness {sorted(gm.witness)}"))
    if c.special_witness is not None:
        sw = c.special_witness
        vs.append(_bool("internal:special_witness", is_rdf(g, sw) and sw.weight == gr.value and not sw.v1
                        and not g.induced_has_isolated(sw.v2), f"witness {sw}"))
    v2 = sorted(f.v2)
    vs.append(_bool("epn_nonempty_for_v2", all(external_private_neighborhood(g, v, v2) for v in v2)))
    if g.n <= cfg.naive_cap:
        nv = gamma_r_naive(g, cfg.naive_cap)
        vs.append(_bool("internal:naive_oracle", nv.value == gr.value, f"naive {nv.value}", exact=gr.value))
    vs.append(_bound("domination_sandwich", c.gamma <= c.gamma_r <= 2 * c.gamma, c.gamma_r,
                     f"[{c.gamma}, {2 * c.gamma}]"))
    vs.append(_bool("lower_equality_only_edgeless", (c.gamma == c.gamma_r) == (g.edge_count == 0),
                    f"gamma={c.gamma}, edges={g.edge_count}", exact=c.gamma_r))
    if g.min_degree() >= 1:
        lb = F.lower_bound_degree(g)
        vs.append(_bound("degree_lower_bound", math.ceil(lb) <= c.gamma_r, c.gamma_r, f">= {lb}"))
    return vs


def _pair_checks(inst: Instance, c, rep: InstanceReport, clock: _Clock, cfg: VerifyConfig) -> list[Verdict]:
    g = inst.graph
    h, _ = mycielskian(g, 1)
    rep.mu1_n = h.n
    if h.n > cfg.exact_cap:
        return [Verdict("mycielskian_sandwich", SKIPPED, "mu_1(G)", detail=f"mu_1 has {h.n} > {cfg.exact_cap} vertices",
                        universal=True)]
    rh = gamma_r(h, clock.solver())
    rep.mu1_gamma_r = rh.value
    d = rh.value - c.gamma_r
    t = "mu_1(G)"
    vs = [
        _bool("internal:mu1_witness", is_rdf(h, rh.witness) and rh.witness.weight == rh.value, target=t),
        _compare("mycielskian_sandwich", rh.value, F.mycielskian_interval(c.gamma_r), t, universal=True),
        _bool("special_iff_plus_one", (d == 1) == c.is_special_roman,
              f"difference {d}, special={c.is_special_roman}", t, exact=rh.value),
    ]
    if c.is_special_roman:
        vs.append(_bool("special_implies_plus_one", d == 1, f"difference {d}", t, exact=rh.value))
    else:
        vs.append(_bool("not_special_implies_plus_two", d == 2, f"difference {d}", t, exact=rh.value))
    if not c.is_roman:
        vs.append(_bool("non_roman_implies_plus_two", d == 2, f"difference {d}", t, exact=rh.value))
    ws = enumerate_gamma_r_witnesses(g, cfg.witness_budget + 1, clock.solver(), value=c.gamma_r)
    if len(ws) > cfg.witness_budget:
        vs.append(Verdict("isolated_in_every_v2_implies_plus_two", SKIPPED, t,
                          detail=f"more than {cfg.witness_budget} optimal functions", universal=True))
    elif all(f.v2 and g.induced_has_isolated(f.v2) for f in ws):
        vs.append(_bool("isolated_in_every_v2_implies_plus_two", d == 2,
                        f"difference {d}; {len(ws)} optimal functions", t, exact=rh.value))
    # the +2 function is only claimed optimal when G is not special
    vs += _check_construction(_construct("mycielskian_plus2_construction", "mycielskian_plus2", g, c.gamma_r_result.witness,
                                         on="mu1", universal=True), h,
                              None if c.is_special_roman else rh.value, t)
    if c.special_witness is not None:
        vs += _check_construction(_construct("special_mycielskian_construction", "special_mycielskian", g,
                                             c.special_witness, on="mu1", universal=True), h, rh.value, t)
    for claim in inst.claims:
        if claim.tag in ("named_family_not_special",):
            vs.append(_compare("non_special_family_plus_two", rh.value, F.mycielskian_plus_two(c.gamma_r), t))
    return vs


def run_instance(inst: Instance, cfg: VerifyConfig = VerifyConfig()) -> InstanceReport:
    t0 = time.perf_counter()
    g = inst.graph
    clock = _Clock(cfg)
    rep = InstanceReport(inst.key, inst.family, inst.params, g.n, g.edge_count)
    exact_allowed = g.n <= cfg.exact_cap
    done: set[int] = set()
    try:
        if not exact_allowed:
            raise SizeLimitError(f"n={g.n} exceeds exact cap {cfg.exact_cap}")
        c = classify(g, clock.solver())
        rep.gamma, rep.gamma_r = c.gamma, c.gamma_r
        rep.is_roman, rep.is_special_roman = c.is_roman, c.is_special_roman
        rep.v1_independent = c.gamma_r_result.v1_independent
        rep.verdicts += _intrinsic(g, c, rep, clock, cfg)
        for i, claim in enumerate(inst.claims):
            if claim.on != "G":
                continue
            if claim.kind == "value":
                v = _compare(claim.tag, c.gamma_r, claim.prediction, universal=claim.universal)
                rep.verdicts.append(replace(v, kind="value"))
            elif claim.kind == "special":
                rep.verdicts.append(_bool(claim.tag, c.is_special_roman == claim.expect,
                                          f"stated {claim.expect}, found {c.is_special_roman}", universal=claim.universal))
            elif claim.kind == "roman":
                rep.verdicts.append(_bool(claim.tag, c.is_roman == claim.expect,
                                          f"stated {claim.expect}, found {c.is_roman}", universal=claim.universal))
            elif claim.kind == "construction":
                rep.verdicts += _check_construction(claim, g, c.gamma_r, "G")
            done.add(i)
        if inst.pair:
            rep.verdicts += _pair_checks(inst, c, rep, clock, cfg)
    except (SizeLimitError, SolverTimeout) as exc:
        rep.skipped = str(exc) if isinstance(exc, SizeLimitError) else f"timeout: {exc}"
        for i, claim in enumerate(inst.claims):
            if i in done:
                continue
            if claim.kind == "construction" and claim.on == "G":
                rep.verdicts += _check_construction(claim, g, None, "G")
            else:
                rep.verdicts.append(_skip(claim, rep.skipped))
        if inst.pair and rep.mu1_gamma_r is None:
            rep.verdicts.append(Verdict("mycielskian_sandwich", SKIPPED, "mu_1(G)", detail=rep.skipped, universal=True))
    rep.elapsed = time.perf_counter() - t0
    return rep


def _run_one(args):
    inst, cfg = args
    return run_instance(inst, cfg)


def run_suite(corpus: list[Instance], config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    if config.jobs > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            reports = list(pool.map(_run_one, [(i, config) for i in corpus], chunksize=4))
    else:
        reports = [run_instance(i, config) for i in corpus]
    reports.sort(key=lambda r: r.key)
    return VerificationReport(config, reports)
