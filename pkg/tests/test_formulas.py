import math
from fractions import Fraction

import pytest

from romanmyc import formulas as F
from romanmyc.graph import complete_graph, cycle_graph, petersen_graph


def test_examples():
    assert F.pt_kn(3, 3).value == 5
    assert F.mu_m_special(4, 2).value == 8
    assert F.mu_m_multipartite(2).value == 7
    assert F.predict("pt_kn", 3, 3) == F.pt_kn(3, 3)
    assert F.petersen().value == 6


def test_lower_bound_degree():
    assert F.lower_bound_degree(petersen_graph()) == 5
    assert F.lower_bound_degree(complete_graph(5)) == 2
    lb = F.lower_bound_degree(cycle_graph(6))
    assert lb == Fraction(4) and math.ceil(lb) == 4


def test_tags_name_the_case():
    assert F.pt_kn(7, 3).source == "pt_kn_closed_form[n=3,t%4=3]"
    assert F.ct_kn(6, 3).source == "ct_kn_closed_form[n=3,t%4=2]"
    assert F.multipartite([2, 5]).source == "multipartite_closed_form[m1<=2]"
    assert F.mu_m_special(4, 5).source == "mu_m_special_closed_form[m%4=1]"


@pytest.mark.parametrize("query, params", [
    ("multipartite", ([4],)),
    ("ct_kn", (2, 3)),
    ("pt_kn", (3, 2)),
    ("pt_multipartite", (2, [3, 4])),
    ("pt_multipartite", (1, [4, 4])),
    ("path", (0,)),
    ("mu_m_special", (5, 2)),
    ("mu_m_special", (2, 2)),
    ("mu_m_multipartite", (1,)),
    ("mu_m_cart1", (1, 3)),
])
def test_out_of_hypothesis_queries_do_not_apply(query, params):
    p = F.predict(query, *params)
    assert not p.applies and p.value is None and p.reason
    assert "does not apply" in str(p)


def test_unknown_query():
    with pytest.raises(ValueError, match="unknown formula"):
        F.predict("wheel", 3)


def test_paths_and_cycles_agree():
    for n in range(3, 40):
        assert F.path(n).value == F.cycle(n).value == math.ceil(2 * n / 3)


def test_prism_piecewise_values():
    assert [F.pt_kn(t, 3).value for t in range(1, 9)] == [2, 4, 5, 6, 8, 10, 11, 12]
    assert [F.ct_kn(t, 3).value for t in range(3, 9)] == [5, 6, 8, 9, 11, 12]
    assert all(F.pt_kn(t, n).value == 2 * t for t in range(1, 8) for n in (4, 5, 9))


def test_multipartite_clauses():
    assert F.multipartite([1, 7]).value == 2
    assert F.multipartite([2, 2, 9]).value == 3
    assert F.multipartite([5, 3, 3]).value == 4


def test_mu_m_special_weakly_increasing():
    for g in range(4, 20, 2):
        vals = [F.mu_m_special(g, m).value for m in range(1, 9)]
        assert vals == sorted(vals)


def test_sandwich_interval():
    p = F.mycielskian_interval(6)
    assert (p.lo, p.hi) == (7, 8) and p.contains(7) and p.contains(8) and not p.contains(9)
    assert not p.is_exact


@pytest.mark.parametrize("t", range(2, 7))
@pytest.mark.parametrize("m", range(2, 9))
def test_grid_families_agree_with_the_general_formula(t, m):
    assert F.mu_m_cart1(t, m).value == F.mu_m_special(2 * t, m).value
    assert F.mu_m_cart2(t, m).value == F.mu_m_special(4 * t, m).value


@pytest.mark.parametrize("m", range(2, 13))
def test_multipartite_family_disagrees_off_m_0_mod_4(m):
    general = F.mu_m_special(4, m).value
    family = F.mu_m_multipartite(m).value
    if m % 4 == 0:
        assert family == general
    else:
        assert abs(family - general) == 1


def test_prediction_rejects_empty_interval():
    with pytest.raises(ValueError):
        F.Prediction("x", 3, 2)
