"""Closed-form predictions of Roman domination numbers.

Each prediction carries a tag naming the formula and the case that fired,
e.g. ``"pt_k3_closed_form[t%4=3]"``.  Queries outside a formula's hypotheses
return a prediction with ``applies == False`` and a reason; nothing is
extrapolated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True)
class Prediction:
    source: str
    lo: int | None = None
    hi: int | None = None
    reason: str = ""

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def applies(self) -> bool:
        return self.lo is not None

    @property
    def is_exact(self) -> bool:
        return self.applies and self.lo == self.hi

    @property
    def value(self) -> int | None:
        return self.lo if self.is_exact else None

    def contains(self, x: int) -> bool:
        return self.applies and self.lo <= x <= self.hi

    def __str__(self) -> str:
        if not self.applies:
            return f"{self.source}: does not apply ({self.reason})"
        if self.is_exact:
            return f"{self.source}: {self.lo}"
        return f"{self.source}: [{self.lo}, {self.hi}]"


def _exact(source: str, value: int) -> Prediction:
    return Prediction(source, value, value)


def _na(source: str, reason: str) -> Prediction:
    return Prediction(source, reason=reason)


def multipartite(parts: Sequence[int]) -> Prediction:
    src = "multipartite_closed_form"
    parts = sorted(parts)
    if len(parts) < 2 or parts[0] < 1:
        return _na(src, "needs at least two parts of size >= 1")
    m1 = parts[0]
    if m1 <= 2:
        return _exact(f"{src}[m1<=2]", m1 + 1)
    return _exact(f"{src}[m1>=3]", 4)


def _grid_k3(t: int, n: int, src: str, cycle: bool) -> Prediction:
    if n != 3:
        return _exact(f"{src}[n>=4]", 2 * t)
    r = t % 4
    # the -1 cases: r = 3 for paths, r in {2, 3} for cycles
    minus = r == 3 or (cycle and r == 2)
    return _exact(f"{src}[n=3,t%4={r}]", 6 * (t // 4) + 2 * r - minus)


def pt_kn(t: int, n: int) -> Prediction:
    src = "pt_kn_closed_form"
    if t < 1 or n < 3:
        return _na(src, "needs t >= 1 and n >= 3")
    return _grid_k3(t, n, src, cycle=False)


def ct_kn(t: int, n: int) -> Prediction:
    src = "ct_kn_closed_form"
    if t < 3 or n < 3:
        return _na(src, "needs t >= 3 (a cycle) and n >= 3")
    return _grid_k3(t, n, src, cycle=True)


def pt_multipartite(t: int, parts: Sequence[int]) -> Prediction:
    src = "pt_multipartite_closed_form"
    parts = sorted(parts)
    if t < 2 or len(parts) < 2 or parts[0] < 4:
        return _na(src, "needs t >= 2 and at least two parts, all of size >= 4")
    return _exact(src, 4 * t)


def pt_star(t: int, n: int) -> Prediction:
    src = "pt_star_closed_form"
    if t < 1 or n < 2:
        return _na(src, "needs t >= 1 and n >= 2")
    return _exact(src, 2 * t)


def path(n: int) -> Prediction:
    if n < 1:
        return _na("path_closed_form", "needs n >= 1")
    return _exact("path_closed_form", math.ceil(2 * n / 3))


def cycle(n: int) -> Prediction:
    if n < 3:
        return _na("cycle_closed_form", "needs n >= 3")
    return _exact("cycle_closed_form", math.ceil(2 * n / 3))


def petersen() -> Prediction:
    return _exact("petersen_value", 6)


def mycielskian_interval(gamma_r_g: int) -> Prediction:
    """gamma_R(G) + 1 <= gamma_R(mu(G)) <= gamma_R(G) + 2."""
    if gamma_r_g < 1:
        return _na("mycielskian_sandwich", "needs gamma_R(G) >= 1")
    return Prediction("mycielskian_sandwich", gamma_r_g + 1, gamma_r_g + 2)


def mu_m_special(gamma_r_g: int, m: int) -> Prediction:
    src = "mu_m_special_closed_form"
    if m < 1:
        return _na(src, "needs m >= 1")
    if gamma_r_g < 4 or gamma_r_g % 2:
        return _na(src, "special Roman graphs have even gamma_R >= 4")
    c = math.ceil(m / 4)
    r = m % 4
    value = {
        0: 2 * c * gamma_r_g + 2,
        1: (2 * c - 1) * gamma_r_g + 1,
        2: 2 * c * gamma_r_g,
        3: 2 * c * gamma_r_g + 1,
    }[r]
    return _exact(f"{src}[m%4={r}]", value)


def mu_m_multipartite(m: int) -> Prediction:
    src = "multipartite_mu_m_closed_form"
    if m < 2:
        return _na(src, "needs m >= 2")
    r = m % 4
    value = 2 * m + 2 if r == 0 else 2 * m + 3 if r == 2 else 2 * m + 4
    return _exact(f"{src}[m%4={r}]", value)


def mu_m_cart1(t: int, m: int) -> Prediction:
    """mu_m of P_t □ K_n (n>=4), C_t □ K_n (n>=4) or P_t □ K_{1,n} (n>=2)."""
    src = "grid_mu_m_closed_form"
    if m < 2 or t < 2:
        return _na(src, "needs m >= 2 and t >= 2")
    r = m % 4
    value = m * t + 2 if r == 0 else (m + 2) * t if r == 2 else (m + 1) * t + 1
    return _exact(f"{src}[m%4={r}]", value)


def mu_m_cart2(t: int, m: int) -> Prediction:
    """mu_m of P_t □ K_{n1..np}, all parts >= 4."""
    src = "grid_multipartite_mu_m_closed_form"
    if m < 2 or t < 2:
        return _na(src, "needs m >= 2 and t >= 2")
    r = m % 4
    value = 2 * m * t + 2 if r == 0 else 2 * (m + 2) * t if r == 2 else 2 * (m + 1) * t + 1
    return _exact(f"{src}[m%4={r}]", value)


def mycielskian_plus_two(gamma_r_g: int) -> Prediction:
    """Named non-special families: gamma_R(mu(G)) = gamma_R(G) + 2."""
    return _exact("non_special_family_plus_two", gamma_r_g + 2)


QUERIES = {
    "multipartite": multipartite,
    "pt_kn": pt_kn,
    "ct_kn": ct_kn,
    "pt_multipartite": pt_multipartite,
    "pt_star": pt_star,
    "path": path,
    "cycle": cycle,
    "petersen": petersen,
    "mycielskian_interval": mycielskian_interval,
    "mu_m_special": mu_m_special,
    "mu_m_multipartite": mu_m_multipartite,
    "mu_m_cart1": mu_m_cart1,
    "mu_m_cart2": mu_m_cart2,
}


def predict(query: str, *params) -> Prediction:
    try:
        fn = QUERIES[query]
    except KeyError:
        raise ValueError(f"unknown formula query {query!r}; expected one of {', '.join(QUERIES)}") from None
    return fn(*params)


def lower_bound_degree(g: Graph) -> Fraction:
    """2n / (Delta + 1) as an exact rational; compare through ceil()."""
    return Fraction(2 * g.n, g.max_degree() + 1)
