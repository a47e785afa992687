import itertools
import math

import pytest
from hypothesis import given, settings

from romanmyc import kernel
from romanmyc.graph import (
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
from romanmyc.rdf import RomanFunction, external_private_neighborhood, is_rdf, is_special
from romanmyc.solver import (
    SizeLimitError,
    SolverConfig,
    SolverTimeout,
    classify,
    enumerate_gamma_r_witnesses,
    gamma,
    gamma_r,
    gamma_r_naive,
    gamma_r_subsets,
    min_dominating_sets,
    naive_optimal_functions,
)

from conftest import graphs, seeded_graphs


def brute_gamma(g):
    for k in range(1, g.n + 1):
        for s in itertools.combinations(g.vertices, k):
            if g.closed_neighborhood(s) == set(g.vertices):
                return k


def test_gamma_examples():
    for n in range(1, 7):
        assert gamma(complete_graph(n)).value == 1
        assert gamma(empty_graph(n)).value == n
    r = gamma(cycle_graph(7))
    assert r.value == 3 == brute_gamma(cycle_graph(7))
    assert cycle_graph(7).closed_neighborhood(r.witness) == set(range(7))


def test_gamma_r_examples():
    assert gamma_r_naive(complete_graph(2)).value == 2
    assert gamma_r_naive(path_graph(4)).value == 3
    assert gamma_r_naive(path_graph(1)).value == 1
    assert gamma_r(cycle_graph(9)).value == 6
    assert gamma_r(petersen_graph()).value == 6
    for n in range(1, 7):
        assert gamma_r(empty_graph(n)).value == n


def test_witness_strings():
    r = gamma_r(petersen_graph())
    assert len(str(r.witness)) == 10 and is_rdf(petersen_graph(), r.witness)
    assert str(gamma_r_naive(path_graph(3)).witness) == "020"


@pytest.mark.parametrize("g", seeded_graphs(60, 9, seed=11), ids=lambda g: repr(g))
def test_oracle_equivalence(g):
    exact = gamma_r(g)
    naive = gamma_r_naive(g)
    assert exact.value == naive.value == gamma_r_subsets(g)
    assert is_rdf(g, exact.witness) and exact.witness.weight == exact.value


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_subset_reduction_equals_naive(g):
    assert gamma_r_subsets(g) == gamma_r_naive(g).value


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=11))
def test_bounds_and_certificates(g):
    gr, gm = gamma_r(g), gamma(g)
    assert gm.value <= gr.value <= 2 * gm.value
    assert gm.value == brute_gamma(g) if g.n <= 8 else True
    if g.min_degree() >= 1:
        assert math.ceil(2 * g.n / (g.max_degree() + 1)) <= gr.value
    assert (gr.value == gm.value) == (g.edge_count == 0)
    f = gr.witness
    assert is_rdf(g, f) and f.weight == gr.value
    assert gr.v1_independent == all(not (g.neighbors(v) & f.v1) for v in f.v1)
    v2 = sorted(f.v2)
    for v in v2:
        assert external_private_neighborhood(g, v, v2)


@pytest.mark.skipif("compiled" not in kernel.BACKENDS, reason="compiled kernel not built")
@pytest.mark.parametrize("g", seeded_graphs(30, 24, seed=3, p=0.3) + [
    petersen_graph(),
    mycielskian(complete_multipartite_graph([3, 3]), 2)[0],
    mycielskian(petersen_graph(), 1)[0],
], ids=lambda g: repr(g))
def test_backends_are_step_identical(g):
    py = SolverConfig(backend="python")
    cc = SolverConfig(backend="compiled")
    a, b = gamma_r(g, py), gamma_r(g, cc)
    assert (a.value, a.witness, a.nodes) == (b.value, b.witness, b.nodes)
    assert (a.backend, b.backend) == ("python", "compiled")
    a, b = gamma(g, py), gamma(g, cc)
    assert (a.value, a.witness, a.nodes) == (b.value, b.witness, b.nodes)
    assert enumerate_gamma_r_witnesses(g, 50, py) == enumerate_gamma_r_witnesses(g, 50, cc)


def test_large_graph_uses_python_backend():
    g = cartesian_product(path_graph(2), complete_graph(33))  # 66 vertices
    r = gamma_r(g, SolverConfig(max_n=100))
    assert r.backend == "python" and is_rdf(g, r.witness)
    assert r.value == 4


def test_determinism(backend):
    g = mycielskian(star_graph(3), 2)[0]
    cfg = SolverConfig(backend=backend)
    runs = [gamma_r(g, cfg) for _ in range(3)]
    assert len({(r.value, r.witness, r.nodes) for r in runs}) == 1


def test_size_refusal_and_timeout():
    g = cartesian_product(path_graph(9), complete_graph(4))
    with pytest.raises(SizeLimitError, match="36 vertices"):
        gamma_r(g, SolverConfig(max_n=32))
    with pytest.raises(SizeLimitError):
        gamma_r_naive(path_graph(13))
    hard = cartesian_product(path_graph(12), complete_graph(3))  # ~40k nodes
    with pytest.raises(SolverTimeout):
        gamma_r(hard, SolverConfig(time_limit_s=0.01, backend="python"))


def test_enumeration_examples():
    k3 = enumerate_gamma_r_witnesses(complete_graph(3))
    assert [str(f) for f in k3] == ["002", "020", "200"]
    assert [str(f) for f in enumerate_gamma_r_witnesses(path_graph(1))] == ["1"]
    p3 = enumerate_gamma_r_witnesses(path_graph(3))
    assert "020" in map(str, p3) and all(f.weight == 2 for f in p3)


@pytest.mark.parametrize("g", seeded_graphs(40, 8, seed=23), ids=lambda g: repr(g))
def test_enumeration_matches_naive(g):
    assert enumerate_gamma_r_witnesses(g, 10 ** 6) == naive_optimal_functions(g)


def test_enumeration_budget():
    assert len(enumerate_gamma_r_witnesses(cycle_graph(12), 2)) == 2


def test_min_dominating_sets():
    sets = min_dominating_sets(cycle_graph(6), 2, 100)
    assert sets == [frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5})]
    assert min_dominating_sets(cycle_graph(6), 2, 100, no_isolated=True) == []


def test_classify_examples():
    c = classify(complete_multipartite_graph([3, 3]))
    assert (c.gamma, c.gamma_r, c.is_roman, c.is_special_roman) == (2, 4, True, True)
    assert is_special(complete_multipartite_graph([3, 3]), c.special_witness)
    c = classify(cycle_graph(4))
    assert (c.gamma_r, c.is_roman, c.is_special_roman) == (3, False, False)
    c = classify(petersen_graph())
    assert (c.gamma, c.gamma_r, c.is_roman, c.is_special_roman) == (3, 6, True, False)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_special_classification_matches_naive(g):
    c = classify(g)
    optimal = naive_optimal_functions(g)
    assert c.is_special_roman == any(is_special(g, f) for f in optimal)
    assert c.is_roman == (c.gamma_r == 2 * brute_gamma(g))


def test_isolated_vertices_handled_by_the_general_rule():
    g = new_graph(5, [(0, 1), (1, 2)])
    assert gamma_r(g).value == 2 + 2
    assert str(gamma_r_naive(g).witness) == "02011"
    assert RomanFunction.from_string("02011").weight == 4


def test_fallback_selected_by_environment():
    import os
    import subprocess
    import sys
    env = dict(os.environ, ROMANMYC_BACKEND="python")
    code = ("from romanmyc import kernel; from romanmyc.solver import gamma_r; "
            "from romanmyc.graph import petersen_graph; r = gamma_r(petersen_graph()); "
            "print(kernel.DEFAULT, r.backend, r.value)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "python", "6"]


def test_unknown_backend():
    with pytest.raises(ValueError, match="unknown or unavailable"):
        gamma_r(path_graph(3), SolverConfig(backend="gpu"))
