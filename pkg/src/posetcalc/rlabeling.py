"""R-labeling verification and the chain/sign-set expansion of the extended ab-index.

An edge labeling is an R-labeling when every interval ``[u, w]`` has exactly
one maximal chain whose labels are weakly increasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import MissingLabel, NegativeLabel, NotAnRLabeling, NotMaximalChain
from .ncpoly import AbWord, NcPoly, subset_mask
from .polynomial import YPoly
from .poset import Poset, maximal_chains

Labeling = dict[tuple[int, int], int]


def normalize_labeling(P: Poset, labels: Mapping | Iterable) -> Labeling:
    """Map every cover ``(u, v)`` (indices) to its integer label.

    Accepts a mapping keyed by pairs of names or indices, or an iterable of
    ``(lower, upper, label)`` triples.
    """
    items = labels.items() if isinstance(labels, Mapping) else (((lo, hi), lab) for lo, hi, lab in labels)
    out: Labeling = {}
    covers = set(P.covers)
    for (lo, hi), lab in items:
        key = (P.index(lo), P.index(hi))
        if key not in covers:
            raise MissingLabel(f"label on ({lo!r}, {hi!r}) which is not a cover")
        out[key] = int(lab)
    missing = [e for e in P.covers if e not in out]
    if missing:
        u, v = missing[0]
        raise MissingLabel(f"cover ({P.names[u]!r}, {P.names[v]!r}) has no label")
    return out


@dataclass(frozen=True)
class RLabelingCheck:
    ok: bool
    witness: tuple[int, int] | None = None
    rising_chains: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self, P: Poset) -> str:
        if self.ok:
            return "R-labeling"
        u, w = self.witness
        return (
            f"interval [{P.names[u]}, {P.names[w]}] has {self.rising_chains} "
            f"weakly increasing maximal chains"
        )


def _rising_counts(P: Poset, labels: Labeling, u: int) -> dict[int, int]:
    """Number of weakly increasing saturated chains from ``u`` to each ``w >= u``."""
    counts: dict[int, int] = {}
    stack: list[tuple[int, float]] = [(u, float("-inf"))]
    while stack:
        v, last = stack.pop()
        counts[v] = counts.get(v, 0) + 1
        for z in P.up[v]:
            lab = labels[(v, z)]
            if lab >= last:
                stack.append((z, lab))
    return counts


def is_r_labeling(P: Poset, labeling) -> RLabelingCheck:
    labels = normalize_labeling(P, labeling)
    for u in P.elements_by_rank():
        counts = _rising_counts(P, labels, u)
        for w in P.elements_by_rank():
            if w == u or not P.leq(u, w):
                continue
            c = counts.get(w, 0)
            if c != 1:
                return RLabelingCheck(False, (u, w), c)
    return RLabelingCheck(True)


def _validate_maximal(P: Poset, M: Sequence) -> tuple[int, ...]:
    idx = tuple(P.index(x) for x in M)
    if len(idx) != P.n + 1 or idx[0] != P.bottom or idx[-1] != P.top:
        raise NotMaximalChain("a maximal chain runs from the minimum to the maximum through every rank")
    for a, b in zip(idx, idx[1:]):
        if b not in P.up[a]:
            raise NotMaximalChain(f"{P.names[a]!r} is not covered by {P.names[b]!r}")
    return idx


SIGN_RULES = ("tiebreak", "literal")


def _signed_keys(labels: Labeling, idx: tuple[int, ...], e: int, rule: str = "tiebreak") -> list[tuple]:
    """Comparison keys for ``(lambda_0, ..., lambda_n)``.

    ``literal`` compares the signed values.  ``tiebreak`` compares the signed
    values of ``lambda(M_{i-1}, M_i) + 1/2 + i*eps``: equal labels then rise
    in the order they occur along the chain, and a zero label keeps its sign.
    Without ties the two rules give the same words.
    """
    if rule not in SIGN_RULES:
        raise ValueError(f"unknown sign rule {rule!r}; expected one of {SIGN_RULES}")
    keys: list[tuple] = [(0, 0, 0)]
    for i, (a, b) in enumerate(zip(idx, idx[1:]), start=1):
        s = -1 if e >> i & 1 else 1
        lab = labels[(a, b)]
        keys.append((s * lab, s, s * i) if rule == "tiebreak" else (s * lab,))
    if rule == "literal":
        keys[0] = (0,)
    return keys


def signed_labels(P: Poset, labeling, M: Sequence, E) -> tuple[int, ...]:
    """``(0, ±lambda(M_0, M_1), ..., ±lambda(M_{n-1}, M_n))``, negative at positions in ``E``."""
    keys = _signed_keys(normalize_labeling(P, labeling), _validate_maximal(P, M), subset_mask(E, 1, P.n), "literal")
    return tuple(k[0] for k in keys)


def descent_word(seq: Sequence) -> AbWord:
    """``b`` at step ``i`` when ``seq[i] > seq[i+1]``, otherwise ``a``."""
    bits = 0
    for i in range(len(seq) - 1):
        if seq[i] > seq[i + 1]:
            bits |= 1 << i
    return AbWord(len(seq) - 1, bits)


def chain_monomial(P: Poset, labeling, M: Sequence, E, rule: str = "tiebreak") -> AbWord:
    """The word ``m(M, E)``: ``b`` where the signed label sequence descends."""
    labels = normalize_labeling(P, labeling)
    return descent_word(_signed_keys(labels, _validate_maximal(P, M), subset_mask(E, 1, P.n), rule))


def expsi_via_rlabeling(P: Poset, labeling, rule: str = "tiebreak") -> NcPoly:
    """``sum_{M, E} y^#E m(M, E)`` over maximal chains ``M`` and ``E`` in ``{1..n}``.

    With ``rule="literal"`` the sum can differ from the extended ab-index
    when equal labels meet along a chain (see ``_signed_keys``).
    """
    labels = normalize_labeling(P, labeling)
    negative = [e for e, lab in labels.items() if lab < 0]
    if negative:
        u, v = negative[0]
        raise NegativeLabel(f"cover ({P.names[u]!r}, {P.names[v]!r}) has a negative label")
    check = is_r_labeling(P, labels)
    if not check:
        raise NotAnRLabeling(check.describe(P))
    n = P.n
    terms: dict[AbWord, YPoly] = {}
    for M in maximal_chains(P):
        for E in range(1 << n):
            w = descent_word(_signed_keys(labels, M, E << 1, rule))
            c = YPoly.monomial(bin(E).count("1"))
            terms[w] = terms[w] + c if w in terms else c
    return NcPoly(n, terms)


def monomial_table(P: Poset, labeling, rule: str = "tiebreak") -> list[tuple[tuple[int, ...], int, tuple[int, ...], AbWord]]:
    """Rows ``(M, E mask, signed label sequence, m(M, E))`` for every maximal chain and ``E``."""
    labels = normalize_labeling(P, labeling)
    rows = []
    for M in maximal_chains(P):
        for E in range(1 << P.n):
            keys = _signed_keys(labels, M, E << 1, rule)
            rows.append((M, E << 1, tuple(k[0] for k in keys), descent_word(keys)))
    return rows
