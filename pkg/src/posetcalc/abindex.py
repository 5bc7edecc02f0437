"""ab-index, Poincaré-extended ab-index and flag vectors.

Every quantity can be computed along several independent routes (``method``)
so that the routes can be checked against each other:

* ``chains``    -- the defining sum over chains ending in the maximum
* ``beta``      -- expansion over the flag h-vector
* ``recursive`` -- recursion over upper intervals ``[w, 1̂]``
* ``omega``     -- the omega transformation applied to the ab-index
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import DenseTableTooLarge, TrivialPoset
from .ncpoly import (
    A,
    B,
    NcPoly,
    a_minus_b_power,
    iota,
    monomial_T,
    monomial_T_E,
    ncp_sum,
    omega,
    subset_mask,
    wt_set,
)
from .polynomial import YPoly
from .poset import Poset, chain_rank_set, chains_to_top, interval_poincare

DENSE_LIMIT = 24

AB_METHODS = ("chains", "beta", "recursive")
EX_METHODS = ("chains", "omega", "recursive", "beta")
EX_TILDE_METHODS = ("chains", "omega", "recursive")

_A = NcPoly.word(A)
_B = NcPoly.word(B)
_ONE_PLUS_Y = YPoly((1, 1))


@dataclass(frozen=True)
class FlagVector:
    """Values on all subsets of ``{0, ..., n-1}``, indexed by bitmask."""

    n: int
    values: tuple[int, ...]

    def __getitem__(self, S: Union[int, Iterable[int]]) -> int:
        return self.values[subset_mask(S, 0, self.n - 1)]

    def items(self):
        return enumerate(self.values)

    def as_table(self) -> list[tuple[list[int], int]]:
        return [
            ([i for i in range(self.n) if mask >> i & 1], v) for mask, v in enumerate(self.values)
        ]


def _check_dense(n: int) -> None:
    if n > DENSE_LIMIT:
        raise DenseTableTooLarge(f"flag table over 2^{n} subsets exceeds the limit 2^{DENSE_LIMIT}")


def _levels(P: Poset) -> list[list[int]]:
    levels: list[list[int]] = [[] for _ in range(P.n + 1)]
    for v in range(len(P)):
        levels[P.rank[v]].append(v)
    return levels


def flag_alpha(P: Poset) -> FlagVector:
    """alpha(S): number of chains ``C_1 < ... < C_k < 1̂`` with rank set ``S``.

    Counted by dynamic programming over the selected rank levels.
    """
    n = P.n
    _check_dense(n)
    levels = _levels(P)
    values = [0] * (1 << n)
    for mask in range(1 << n):
        ranks = [r for r in range(n) if mask >> r & 1]
        if not ranks:
            values[mask] = 1
            continue
        counts = {v: 1 for v in levels[ranks[0]]}
        for r in ranks[1:]:
            counts = {
                z: sum(c for v, c in counts.items() if P.leq(v, z)) for z in levels[r]
            }
        values[mask] = sum(counts.values())
    return FlagVector(n, tuple(values))


def flag_beta(P: Poset, alpha: FlagVector | None = None) -> FlagVector:
    """beta(T) = sum over S in T of (-1)^|T - S| alpha(S)."""
    alpha = alpha or flag_alpha(P)
    values = list(alpha.values)
    for i in range(alpha.n):
        bit = 1 << i
        for mask in range(len(values)):
            if mask & bit:
                values[mask] -= values[mask ^ bit]
    return FlagVector(alpha.n, tuple(values))


def alpha_from_beta(beta: FlagVector) -> FlagVector:
    """Inverse transform: alpha(S) = sum over T in S of beta(T)."""
    values = list(beta.values)
    for i in range(beta.n):
        bit = 1 << i
        for mask in range(len(values)):
            if mask & bit:
                values[mask] += values[mask ^ bit]
    return FlagVector(beta.n, tuple(values))


# -- recursive building blocks ----------------------------------------------------


class _UpperIntervals:
    """Memoized tilde indices of the upper intervals ``[w, 1̂]`` of one poset."""

    def __init__(self, P: Poset):
        self.P = P
        self._psi: dict[int, NcPoly] = {}
        self._expsi: dict[int, NcPoly] = {}
        self._strict_above = {
            w: [v for v in P.elements_by_rank() if v != w and v != P.top and P.leq(w, v)]
            for w in range(len(P))
        }

    def psi_tilde(self, w: int) -> NcPoly:
        hit = self._psi.get(w)
        if hit is not None:
            return hit
        P = self.P
        m = P.n - P.rank[w]
        parts = [a_minus_b_power(m - 1)]
        for v in self._strict_above[w]:
            k = P.rank[v] - P.rank[w]
            parts.append(a_minus_b_power(k - 1) * _B * self.psi_tilde(v))
        out = ncp_sum(parts, m - 1)
        self._psi[w] = out
        return out

    def expsi_tilde(self, w: int) -> NcPoly:
        hit = self._expsi.get(w)
        if hit is not None:
            return hit
        P = self.P
        m = P.n - P.rank[w]
        parts = [a_minus_b_power(m - 1) * interval_poincare(P, w, P.top)]
        for v in self._strict_above[w]:
            k = P.rank[v] - P.rank[w]
            head = a_minus_b_power(k - 1) * _B * interval_poincare(P, w, v)
            parts.append(head * self.expsi_tilde(v))
        out = ncp_sum(parts, m - 1)
        self._expsi[w] = out
        return out

    def interior(self) -> list[int]:
        P = self.P
        return [w for w in P.elements_by_rank() if w != P.bottom and w != P.top]


def _require_nontrivial(P: Poset) -> None:
    if P.n == 0:
        raise TrivialPoset("operation needs a poset of rank at least 1")


def _check_method(method: str, allowed: tuple[str, ...]) -> None:
    if method not in allowed:
        raise ValueError(f"unknown method {method!r}; expected one of {allowed}")


# -- ab-index ------------------------------------------------------------------------


def _psi_chains(P: Poset, bottom_only: bool = False) -> NcPoly:
    start = P.bottom if bottom_only else None
    return ncp_sum((wt_set(chain_rank_set(P, c), P.n) for c in chains_to_top(P, start)), P.n)


def _psi_beta(P: Poset) -> NcPoly:
    beta = flag_beta(P)
    return NcPoly(P.n, {monomial_T(T, P.n): b for T, b in beta.items() if b})


def _psi_recursive(P: Poset) -> NcPoly:
    _require_nontrivial(P)
    up = _UpperIntervals(P)
    parts = [_A * a_minus_b_power(P.n - 1)]
    for w in up.interior():
        k = P.rank[w]
        parts.append(_A * a_minus_b_power(k - 1) * _B * up.psi_tilde(w))
    return ncp_sum(parts, P.n)


def ab_index(P: Poset, method: str = "chains") -> NcPoly:
    """The ab-index: sum of ``wt_C`` over all chains ``C`` ending in ``1̂``."""
    _check_method(method, AB_METHODS)
    if method == "chains":
        return _psi_chains(P)
    if method == "beta":
        return _psi_beta(P)
    return _psi_recursive(P)


def ab_index_tilde(P: Poset, method: str = "chains") -> NcPoly:
    _check_method(method, AB_METHODS)
    _require_nontrivial(P)
    if method == "chains":
        return iota(_psi_chains(P, bottom_only=True))
    if method == "beta":
        return iota(_psi_beta(P))
    return _UpperIntervals(P).psi_tilde(P.bottom)


# -- extended ab-index ----------------------------------------------------------


def _expsi_chains(P: Poset, bottom_only: bool = False) -> NcPoly:
    start = P.bottom if bottom_only else None
    parts = []
    for c in chains_to_top(P, start):
        weight = YPoly.one()
        for u, v in zip(c, c[1:]):
            weight = weight * interval_poincare(P, u, v)
        parts.append(wt_set(chain_rank_set(P, c), P.n) * weight)
    return ncp_sum(parts, P.n)


def _expsi_recursive(P: Poset) -> NcPoly:
    _require_nontrivial(P)
    n = P.n
    up = _UpperIntervals(P)
    poin = interval_poincare(P, P.bottom, P.top)
    parts = [a_minus_b_power(n), _B * a_minus_b_power(n - 1) * poin]
    for w in up.interior():
        k = P.rank[w]
        head = a_minus_b_power(k) + _B * a_minus_b_power(k - 1) * interval_poincare(P, P.bottom, w)
        parts.append(head * _B * up.expsi_tilde(w))
    return ncp_sum(parts, n)


def _expsi_beta(P: Poset) -> NcPoly:
    beta = flag_beta(P)
    return ncp_sum(
        (omega(NcPoly.word(monomial_T(T, P.n))) * b for T, b in beta.items() if b), P.n
    )


def ex_ab_index(P: Poset, method: str = "omega") -> NcPoly:
    """The Poincaré-extended ab-index ``sum_C Poin_{P,C}(y) wt_C``."""
    _check_method(method, EX_METHODS)
    if method == "chains":
        return _expsi_chains(P)
    if method == "omega":
        return omega(ab_index(P, "chains"))
    if method == "recursive":
        return _expsi_recursive(P)
    return _expsi_beta(P)


def ex_ab_index_tilde(P: Poset, method: str = "omega") -> NcPoly:
    _check_method(method, EX_TILDE_METHODS)
    _require_nontrivial(P)
    if method == "chains":
        return iota(_expsi_chains(P, bottom_only=True))
    if method == "omega":
        return omega(ab_index_tilde(P, "chains")) * _ONE_PLUS_Y
    return _UpperIntervals(P).expsi_tilde(P.bottom)


def expsi_via_beta_e(P: Poset) -> NcPoly:
    """``sum_{T, E} beta(T) y^#E m_T(E)`` with ``E`` ranging over subsets of ``{1..n}``."""
    _require_nontrivial(P)
    n = P.n
    beta = flag_beta(P)
    terms: dict = {}
    for T, b in beta.items():
        if not b:
            continue
        for E in range(1 << n):
            w = monomial_T_E(T, E << 1, n)
            c = YPoly.monomial(bin(E).count("1"), b)
            terms[w] = terms[w] + c if w in terms else c
    return NcPoly(n, terms)


# -- closed forms of omega(Psi) over upper intervals ----------------------------------


def _neg_y_power(k: int) -> YPoly:
    return YPoly.monomial(k, -1 if k % 2 else 1)


def omega_psi_closed_form(P: Poset) -> NcPoly:
    """Right-hand side of the recursion for ``omega(Psi_P)`` over interior elements."""
    _require_nontrivial(P)
    n = P.n
    up = _UpperIntervals(P)
    lead = _A - _B * _neg_y_power(n)
    parts = [lead * a_minus_b_power(n - 1)]
    for w in up.interior():
        k = P.rank[w]
        head = _A * a_minus_b_power(k - 1) * _B - _B * a_minus_b_power(k - 1) * _A * _neg_y_power(k)
        parts.append(head * _ONE_PLUS_Y * omega(up.psi_tilde(w)))
    return ncp_sum(parts, n)


def omega_psi_tilde_closed_form(P: Poset) -> NcPoly:
    """Right-hand side of the recursion for ``omega(Psi~_P)``."""
    _require_nontrivial(P)
    n = P.n
    up = _UpperIntervals(P)
    lead = (YPoly.one() - _neg_y_power(n)).exact_div(_ONE_PLUS_Y)
    parts = [a_minus_b_power(n - 1) * lead]
    for w in up.interior():
        k = P.rank[w]
        head = a_minus_b_power(k - 1) * (_B - _A * _neg_y_power(k))
        parts.append(head * omega(up.psi_tilde(w)))
    return ncp_sum(parts, n - 1)
