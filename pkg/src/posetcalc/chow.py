"""Chow and augmented Chow polynomials, gamma expansions, canonical decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .abindex import ex_ab_index, ex_ab_index_tilde, flag_beta
from .errors import TrivialPoset
from .ncpoly import NcPoly, mask_members, monomial_T, omega, omega_ev_point
from .polynomial import XPoly
from .poset import Poset, interval

_X = XPoly.gen()
_ONE_PLUS_X = XPoly((1, 1))
_ONE_MINUS_X = XPoly((1, -1))


def isolated_subsets(lo: int, hi: int) -> Iterator[int]:
    """Bitmasks of subsets of ``{lo, ..., hi}`` without two consecutive members.

    Emitted in increasing bitmask order.
    """
    if lo > hi + 1:
        raise ValueError(f"empty range needs lo <= hi + 1, got [{lo}, {hi}]")

    def grow(pos: int, mask: int) -> Iterator[int]:
        # pos: next admissible position
        yield mask
        for i in range(pos, hi + 1):
            yield from grow(i + 2, mask | 1 << i)

    yield from sorted(grow(lo, 0))


def is_isolated(mask: int) -> bool:
    return mask & (mask >> 1) == 0


def chow(P: Poset, augmented: bool = True, method: str = "omega") -> XPoly:
    """``H^aug_P = exPsi(-x,1,x)/(1-x)^n`` or ``H_P = exPsi~(-x,1,x)/(1-x)^n``."""
    n = P.n
    if augmented:
        f = ex_ab_index(P, method)
    else:
        if n == 0:
            raise TrivialPoset("the plain Chow polynomial needs rank at least 1")
        f = ex_ab_index_tilde(P, method)
    return omega_ev_point(f).exact_div(_ONE_MINUS_X ** n)


@dataclass
class GammaExpansion:
    n: int
    augmented: bool
    terms: list[tuple[int, int]] = field(default_factory=list)

    @property
    def top_degree(self) -> int:
        return self.n if self.augmented else self.n - 1

    def has_negative(self) -> bool:
        return any(c < 0 for _, c in self.terms)

    def expand(self) -> XPoly:
        d = self.top_degree
        total = XPoly.zero()
        for T, c in self.terms:
            k = bin(T).count("1")
            total = total + XPoly.monomial(k, c) * _ONE_PLUS_X ** (d - 2 * k)
        return total

    def coefficients(self) -> dict[int, int]:
        """Aggregate coefficient of ``x^k (1+x)^(d-2k)`` per ``k``."""
        out: dict[int, int] = {}
        for T, c in self.terms:
            k = bin(T).count("1")
            out[k] = out.get(k, 0) + c
        return dict(sorted(out.items()))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "augmented": self.augmented,
            "terms": [{"T": mask_members(T), "coefficient": c} for T, c in self.terms],
            "gamma": [self.coefficients().get(k, 0) for k in range(self.top_degree // 2 + 1)],
            "nonnegative": not self.has_negative(),
        }


def gamma_expansion(P: Poset, augmented: bool = True) -> GammaExpansion:
    """Flag h-vector values on isolated subsets of ``{1..n-1}`` (augmented) or
    ``{2..n-1}`` (plain).  Negative coefficients are kept as they are."""
    n = P.n
    if not augmented and n == 0:
        raise TrivialPoset("the plain Chow polynomial needs rank at least 1")
    beta = flag_beta(P)
    lo = 1 if augmented else 2
    hi = n - 1
    if lo > hi + 1:
        subsets: list[int] = [0]
    else:
        subsets = list(isolated_subsets(lo, hi))
    terms = [(T, beta.values[T]) for T in subsets if beta.values[T]]
    return GammaExpansion(n, augmented, terms)


def monomial_chow_image(T: int, n: int) -> XPoly:
    """``omega_ev(m_T)``: ``omega(m_T)`` at ``y -> -x, a -> 1, b -> x``."""
    return omega_ev_point(omega(NcPoly.word(monomial_T(T, n))))


@dataclass
class DecompositionReport:
    augmented_lhs: XPoly
    augmented_rhs: XPoly
    plain_lhs: XPoly
    plain_rhs: XPoly

    @property
    def augmented_ok(self) -> bool:
        return self.augmented_lhs == self.augmented_rhs

    @property
    def plain_ok(self) -> bool:
        return self.plain_lhs == self.plain_rhs

    @property
    def ok(self) -> bool:
        return self.augmented_ok and self.plain_ok


def canonical_decomposition_check(P: Poset) -> DecompositionReport:
    """Both sides of the numerical canonical decompositions

        H^aug_P = [n+1]_x + sum_{0̂<w<1̂} x [rk w]_x H_[w,1̂]
        H_P     = [n]_x   + sum_{0̂<w<1̂} x [rk w - 1]_x H_[w,1̂]

    with ``[k]_x = 1 + x + ... + x^(k-1)``.
    """
    if P.n == 0:
        raise TrivialPoset("canonical decomposition needs rank at least 1")
    n = P.n
    aug_rhs = XPoly.geometric(n + 1)
    plain_rhs = XPoly.geometric(n)
    for w in P.elements_by_rank():
        if w in (P.bottom, P.top):
            continue
        k = P.rank[w]
        h_upper = chow(interval(P, w, P.top), augmented=False)
        # (x - x^(k+1))/(1-x) = x [k]_x and (x - x^k)/(1-x) = x [k-1]_x
        aug_rhs = aug_rhs + _X * XPoly.geometric(k) * h_upper
        plain_rhs = plain_rhs + _X * XPoly.geometric(k - 1) * h_upper
    return DecompositionReport(
        augmented_lhs=chow(P, augmented=True),
        augmented_rhs=aug_rhs,
        plain_lhs=chow(P, augmented=False),
        plain_rhs=plain_rhs,
    )
