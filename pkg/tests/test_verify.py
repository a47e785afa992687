import json
from collections import defaultdict
from dataclasses import replace

import pytest

from romanmyc.graph import complete_multipartite_graph, cycle_graph, mycielskian
from romanmyc.solver import gamma_r_subsets
from romanmyc.verify import (
    BOUND_HOLDS,
    CONSTRUCTION_INVALID,
    MATCH,
    MISMATCH,
    SCHEMA,
    SKIPPED,
    Instance,
    VerifyConfig,
    build_corpus,
    run_instance,
    run_suite,
)

SMALL = VerifyConfig(random_count=8, mu_order=3)


@pytest.fixture(scope="module")
def report():
    return run_suite(build_corpus(SMALL), SMALL)


def strip_timing(d):
    for inst in d["instances"]:
        inst.pop("elapsed")
    return d


def test_corpus_is_deterministic():
    a, b = build_corpus(SMALL), build_corpus(SMALL)
    assert a == b
    assert [i.key for i in a] == sorted(i.key for i in a)
    c = build_corpus(replace(SMALL, seed=7))
    assert [i.graph for i in c if i.family == "random"] != [i.graph for i in a if i.family == "random"]


def test_corpus_contains_petersen_pair():
    pet = [i for i in build_corpus() if i.key == "petersen"]
    assert len(pet) == 1 and pet[0].pair


def test_caps_filter_exact_claims():
    cfg = VerifyConfig(naive_cap=12, exact_cap=24, mu_order=1, random_count=4)
    corpus = build_corpus(cfg)
    for inst in corpus:
        if inst.graph.n > 24:
            assert all(c.kind == "construction" for c in inst.claims)
            assert not inst.pair
    assert not [i for i in corpus if i.family == "mycielskian" and "m=2" in i.key]


def test_every_claim_applies():
    for inst in build_corpus(SMALL):
        for c in inst.claims:
            assert c.kind != "value" or c.prediction.applies


def by_tag(inst_report):
    return {v.tag: v for v in inst_report.verdicts}


def test_non_special_cycle_gains_two(report):
    c4 = report.instance("cycle/n=04")
    assert (c4.gamma_r, c4.is_special_roman, c4.mu1_gamma_r) == (3, False, 5)
    v = by_tag(c4)
    assert v["not_special_implies_plus_two"].status == MATCH
    assert v["special_iff_plus_one"].status == MATCH
    assert v["mycielskian_sandwich"].status == BOUND_HOLDS


def test_special_bipartite_gains_one(report):
    k33 = report.instance("multipartite/03-03")
    assert (k33.gamma_r, k33.is_special_roman, k33.mu1_gamma_r) == (4, True, 5)
    assert by_tag(k33)["special_implies_plus_one"].status == MATCH


def test_mu_2_arbitration(report):
    inst = report.instance("mu_m/K3,3/m=2")
    g, _ = mycielskian(complete_multipartite_graph([3, 3]), 2)
    assert inst.gamma_r == gamma_r_subsets(g) == 6
    arb = [a for a in report.arbitrations() if a["instance"] == inst.key]
    assert len(arb) == 1
    predicted = {c["tag"]: (c["predicted"], c["status"]) for c in arb[0]["claims"]}
    assert predicted == {
        "mu_m_special_closed_form[m%4=2]": ("8", MISMATCH),
        "multipartite_mu_m_closed_form[m%4=2]": ("7", MISMATCH),
    }
    assert by_tag(inst)["mu_m_construction"].status == "CONSTRUCTION_VALID"


def test_mu_3_arbitration(report):
    inst = report.instance("mu_m/K3,3/m=3")
    assert inst.n == 25 and inst.gamma_r == 9
    arb = {a["instance"]: a for a in report.arbitrations()}[inst.key]
    assert arb["winners"] == ["mu_m_special_closed_form[m%4=3]"]


def test_report_invariants(report):
    assert not report.failed
    for inst in report.instances:
        seen = defaultdict(set)
        for v in inst.verdicts:
            seen[(v.tag, v.target)].add(v.status)
            if v.status == CONSTRUCTION_INVALID:
                assert "undefended" in v.detail and any(ch.isdigit() for ch in v.detail)
        for statuses in seen.values():
            assert not {MATCH, MISMATCH} <= statuses
        assert inst.skipped or inst.gamma_r is not None


def test_report_is_complete(report):
    claims = {i.key: i.claims for i in build_corpus(SMALL)}
    for inst in report.instances:
        tags = {v.tag for v in inst.verdicts}
        assert {c.tag for c in claims[inst.key]} <= tags


def test_universal_claims_hold_corpus_wide(report):
    assert report.violations == []
    universal = {v.tag for _, v in report.verdicts() if v.universal}
    assert {"mycielskian_sandwich", "special_iff_plus_one", "domination_sandwich",
            "degree_lower_bound", "internal:naive_oracle"} <= universal


def test_json_schema(report):
    d = json.loads(report.to_json())
    assert d["schema"] == SCHEMA
    assert d["summary"]["failed"] is False
    assert d["summary"]["instances"] == len(report.instances)
    assert sum(d["summary"]["counts"].values()) == sum(1 for _ in report.verdicts())
    first = d["instances"][0]
    assert {"key", "n", "gamma", "gamma_r", "verdicts", "difference"} <= set(first)
    assert {"tag", "status", "target", "exact", "predicted", "weight", "detail", "universal"} <= set(first["verdicts"][0])


def test_text_report_mentions_arbitration(report):
    text = report.to_text()
    assert "arbitrations:" in text and "mu_m/K3,3/m=2" in text and "neither formula holds" in text
    assert text.rstrip().endswith("suite passed")


def test_report_determinism_and_parallelism():
    cfg = replace(SMALL, mu_order=2, random_count=6)
    serial = strip_timing(run_suite(build_corpus(cfg), cfg).to_dict())
    again = strip_timing(run_suite(build_corpus(cfg), cfg).to_dict())
    par_cfg = replace(cfg, jobs=2)
    parallel = strip_timing(run_suite(build_corpus(par_cfg), par_cfg).to_dict())
    parallel["config"]["jobs"] = 1
    assert serial == again == parallel


def test_timeout_yields_skipped():
    cfg = VerifyConfig(time_limit_s=1e-9)
    inst = [i for i in build_corpus(cfg) if i.key == "petersen"][0]
    rep = run_instance(inst, cfg)
    assert rep.skipped.startswith("timeout")
    statuses = {v.tag: v.status for v in rep.verdicts}
    assert statuses["petersen_value"] == SKIPPED
    assert statuses["petersen_construction"] == "CONSTRUCTION_VALID"


def test_witness_budget_overflow_is_skipped():
    cfg = VerifyConfig(witness_budget=1)
    rep = run_instance(Instance("c6", "cycle", "n=6", cycle_graph(6), (), True), cfg)
    v = by_tag(rep)["isolated_in_every_v2_implies_plus_two"]
    assert v.status == SKIPPED and "more than 1" in v.detail


def test_findings_are_not_failures(report):
    k12 = report.instance("multipartite/01-02")
    assert by_tag(k12)["multipartite_roman_iff_no_part_of_two"].status == MISMATCH
    assert not any(v.violated for v in k12.verdicts)
