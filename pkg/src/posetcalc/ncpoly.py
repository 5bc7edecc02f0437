"""Homogeneous polynomials in two noncommuting variables over Z[y].

Words over ``{a, b}`` are packed into an integer: bit ``i`` is the letter at
position ``i`` counted from the left, 0 for ``a`` and 1 for ``b``.  Words are
capped at length 32.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Union

from .errors import DegreeMismatch, IndexOutOfRange, WordTooLong, ZeroDegree
from .polynomial import XPoly, YPoly

MAX_WORD = 32

SubsetLike = Union[int, Iterable[int]]


class AbWord:
    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if not 0 <= length <= MAX_WORD:
            raise WordTooLong(f"word length {length} outside [0, {MAX_WORD}]")
        if bits >> length:
            raise ValueError("bits set beyond word length")
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("AbWord is immutable")

    @classmethod
    def parse(cls, text: str) -> "AbWord":
        bits = 0
        for i, ch in enumerate(text):
            if ch == "b":
                bits |= 1 << i
            elif ch != "a":
                raise ValueError(f"invalid letter {ch!r} in word {text!r}")
        return cls(len(text), bits)

    def __getitem__(self, i: int) -> str:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return "b" if self.bits >> i & 1 else "a"

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return "".join("b" if self.bits >> i & 1 else "a" for i in range(self.length))

    def __repr__(self) -> str:
        return f"AbWord({str(self)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbWord):
            return NotImplemented
        return self.length == other.length and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def __lt__(self, other: "AbWord") -> bool:
        return str(self) < str(other)

    def concat(self, other: "AbWord") -> "AbWord":
        length = self.length + other.length
        if length > MAX_WORD:
            raise WordTooLong(f"product word length {length} exceeds {MAX_WORD}")
        return AbWord(length, self.bits | other.bits << self.length)

    def tail(self) -> "AbWord":
        if self.length == 0:
            raise ZeroDegree("cannot drop the initial letter of the empty word")
        return AbWord(self.length - 1, self.bits >> 1)

    def count_b(self) -> int:
        return bin(self.bits).count("1")


EMPTY = AbWord(0, 0)
A = AbWord(1, 0)
B = AbWord(1, 1)

CoeffLike = Union[YPoly, int]


def _as_ypoly(c: CoeffLike) -> YPoly:
    if isinstance(c, YPoly):
        return c
    if isinstance(c, int):
        return YPoly.constant(c)
    raise TypeError(f"expected YPoly or int, got {type(c).__name__}")


class NcPoly:
    """Element of ``Z[y]<a, b>`` homogeneous of degree ``degree``."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[AbWord, CoeffLike] | None = None):
        if not 0 <= degree <= MAX_WORD:
            raise WordTooLong(f"degree {degree} outside [0, {MAX_WORD}]")
        clean: dict[AbWord, YPoly] = {}
        for w, c in (terms or {}).items():
            if w.length != degree:
                raise DegreeMismatch(f"word {w} does not have degree {degree}")
            c = _as_ypoly(c)
            if c:
                clean[w] = c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("NcPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "NcPoly":
        return cls(degree)

    @classmethod
    def one(cls) -> "NcPoly":
        return cls(0, {EMPTY: 1})

    @classmethod
    def word(cls, w: AbWord | str, coeff: CoeffLike = 1) -> "NcPoly":
        if isinstance(w, str):
            w = AbWord.parse(w)
        return cls(w.length, {w: coeff})

    @classmethod
    def from_dict(cls, data: Mapping[str, Iterable[int]], degree: int | None = None) -> "NcPoly":
        """Build from ``{"ab": [c0, c1, ...], ...}``."""
        terms = {AbWord.parse(k): YPoly(v) for k, v in data.items()}
        if degree is None:
            lengths = {w.length for w in terms}
            if len(lengths) > 1:
                raise DegreeMismatch(f"inhomogeneous words {sorted(lengths)}")
            degree = lengths.pop() if lengths else 0
        return cls(degree, terms)

    # -- queries -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: AbWord | str) -> YPoly:
        if isinstance(w, str):
            w = AbWord.parse(w)
        return self.terms.get(w, YPoly.zero())

    def sorted_terms(self) -> list[tuple[AbWord, YPoly]]:
        return sorted(self.terms.items(), key=lambda kv: str(kv[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcPoly):
            return NotImplemented
        if not self.terms and not other.terms:
            return self.degree == other.degree
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.terms.items())))

    def map_coeffs(self, fn) -> "NcPoly":
        return NcPoly(self.degree, {w: fn(c) for w, c in self.terms.items()})

    def specialize_y(self, value: int) -> "NcPoly":
        """Substitute an integer for ``y`` in every coefficient."""
        return self.map_coeffs(lambda c: YPoly.constant(c(value)))

    def is_y_free(self) -> bool:
        return all(c.degree <= 0 for c in self.terms.values())

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "NcPoly") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NotImplemented
        return ncp_add(self, other)

    def __neg__(self) -> "NcPoly":
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NotImplemented
        return ncp_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return ncp_mul(self, other)
        if isinstance(other, (YPoly, int)):
            return ncp_scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (YPoly, int)):
            return ncp_scale(self, other)
        return NotImplemented

    def __pow__(self, k: int) -> "NcPoly":
        result = NcPoly.one()
        for _ in range(k):
            result = result * self
        return result

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"NcPoly({self.degree}, {{{', '.join(f'{w}: {c.coeffs}' for w, c in self.sorted_terms())}}})"

    def to_dict(self) -> dict[str, list[int]]:
        return {str(w): list(c.coeffs) for w, c in self.sorted_terms()}


def render(f: NcPoly) -> str:
    """Canonical text: ``(1 + 3y)·ab + (y^2)·bb``, words sorted with a < b."""
    if not f.terms:
        return "0"
    parts = []
    for w, c in f.sorted_terms():
        parts.append(f"({c})·{w}" if w.length else f"({c})")
    return " + ".join(parts)


def ncp_add(f: NcPoly, g: NcPoly) -> NcPoly:
    if f.degree != g.degree:
        if not f.terms:
            return g
        if not g.terms:
            return f
        raise DegreeMismatch(f"cannot add degree {f.degree} and degree {g.degree}")
    terms = dict(f.terms)
    for w, c in g.terms.items():
        terms[w] = terms[w] + c if w in terms else c
    return NcPoly(f.degree, terms)


def ncp_scale(f: NcPoly, c: CoeffLike) -> NcPoly:
    c = _as_ypoly(c)
    return NcPoly(f.degree, {w: v * c for w, v in f.terms.items()})


def ncp_mul(f: NcPoly, g: NcPoly) -> NcPoly:
    degree = f.degree + g.degree
    if degree > MAX_WORD:
        raise WordTooLong(f"product degree {degree} exceeds {MAX_WORD}")
    terms: dict[AbWord, YPoly] = {}
    for u, c in f.terms.items():
        for v, d in g.terms.items():
            w = u.concat(v)
            cd = c * d
            terms[w] = terms[w] + cd if w in terms else cd
    return NcPoly(degree, terms)


def ncp_sum(polys: Iterable[NcPoly], degree: int) -> NcPoly:
    terms: dict[AbWord, YPoly] = {}
    for f in polys:
        if f.terms and f.degree != degree:
            raise DegreeMismatch(f"cannot add degree {f.degree} to a degree {degree} sum")
        for w, c in f.terms.items():
            terms[w] = terms[w] + c if w in terms else c
    return NcPoly(degree, terms)


# -- omega and iota ------------------------------------------------------------

_Y = YPoly.gen()
_ONE_PLUS_Y = YPoly((1, 1))
_Y_PLUS_Y2 = YPoly((0, 1, 1))

# images of the three block types, as (length, {bits: coeff})
_PAIR_IMAGE = ((0b10, _ONE_PLUS_Y), (0b01, _Y_PLUS_Y2))  # ab, ba
_A_IMAGE = ((0, YPoly.one()), (1, _Y))  # a + y b
_B_IMAGE = ((1, YPoly.one()), (0, _Y))  # b + y a


def ab_pair_positions(w: AbWord) -> list[int]:
    """Positions ``i`` with ``w[i] = a`` and ``w[i+1] = b``."""
    bits = w.bits
    return [i for i in range(w.length - 1) if not bits >> i & 1 and bits >> (i + 1) & 1]


@lru_cache(maxsize=1 << 16)
def _omega_word(length: int, bits: int) -> tuple[tuple[int, YPoly], ...]:
    w = AbWord(length, bits)
    marked = ab_pair_positions(w)
    marked_set = set(marked)
    assert not any(i + 1 in marked_set for i in marked), "overlapping ab-pairs"

    expansion: dict[int, YPoly] = {0: YPoly.one()}
    pos = 0
    while pos < length:
        if pos in marked_set:
            image, width = _PAIR_IMAGE, 2
        elif bits >> pos & 1:
            image, width = _B_IMAGE, 1
        else:
            image, width = _A_IMAGE, 1
        nxt: dict[int, YPoly] = {}
        for prefix, c in expansion.items():
            for block_bits, d in image:
                key = prefix | block_bits << pos
                cd = c * d
                nxt[key] = nxt[key] + cd if key in nxt else cd
        expansion = nxt
        pos += width
    return tuple(expansion.items())


def omega(f: NcPoly) -> NcPoly:
    """Replace each ``ab`` factor by ``(1+y)ab + (y+y^2)ba``, then ``a -> a+yb``
    and ``b -> b+ya`` on the remaining letters."""
    terms: dict[AbWord, YPoly] = {}
    for w, c in f.terms.items():
        for bits, d in _omega_word(w.length, w.bits):
            key = AbWord(w.length, bits)
            cd = c * d
            terms[key] = terms[key] + cd if key in terms else cd
    return NcPoly(f.degree, terms)


def iota(f: NcPoly) -> NcPoly:
    """Drop the initial letter of every word."""
    if f.degree == 0:
        raise ZeroDegree("iota needs degree at least 1")
    terms: dict[AbWord, YPoly] = {}
    for w, c in f.terms.items():
        t = w.tail()
        terms[t] = terms[t] + c if t in terms else c
    return NcPoly(f.degree - 1, terms)


# -- subsets and monomials -------------------------------------------------------


def subset_mask(S: SubsetLike, lo: int, hi: int) -> int:
    """Bitmask of ``S``; every member must lie in ``[lo, hi]``."""
    if isinstance(S, int) and not isinstance(S, bool):
        members = [i for i in range(S.bit_length()) if S >> i & 1]
        if S < 0:
            raise IndexOutOfRange("negative subset mask")
    else:
        members = list(S)
    mask = 0
    for i in members:
        if not lo <= i <= hi:
            raise IndexOutOfRange(f"index {i} outside [{lo}, {hi}]")
        mask |= 1 << i
    return mask


def mask_members(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


_A_MINUS_B = NcPoly(1, {A: 1, B: -1})
_B_POLY = NcPoly(1, {B: 1})


def a_minus_b_power(k: int) -> NcPoly:
    return wt_set(0, k)


def wt_set(S: SubsetLike, n: int) -> NcPoly:
    """``w_0 ... w_{n-1}`` with ``w_k = b`` for ``k`` in ``S`` and ``a - b`` otherwise."""
    mask = subset_mask(S, 0, n - 1)
    return _wt_mask(mask, n)


@lru_cache(maxsize=1 << 14)
def _wt_mask(mask: int, n: int) -> NcPoly:
    # expand directly: choose a or b at each free position, sign by count of b's chosen there
    free = [k for k in range(n) if not mask >> k & 1]
    terms: dict[AbWord, int] = {}
    for choice in range(1 << len(free)):
        bits = mask
        sign = 1
        for j, k in enumerate(free):
            if choice >> j & 1:
                bits |= 1 << k
                sign = -sign
        terms[AbWord(n, bits)] = sign
    return NcPoly(n, terms)


def monomial_T(T: SubsetLike, n: int) -> AbWord:
    """``m_T``: letter ``b`` at positions in ``T``, ``a`` elsewhere."""
    return AbWord(n, subset_mask(T, 0, n - 1))


def monomial_T_E(T: SubsetLike, E: SubsetLike, n: int) -> AbWord:
    """Alter ``m_T``: an ``a`` at ``i`` becomes ``b`` if ``i+1`` is in ``E``;
    a ``b`` at ``i`` becomes ``a`` if ``i`` is in ``E``."""
    t = subset_mask(T, 0, n - 1)
    e = subset_mask(E, 1, n)
    bits = 0
    for i in range(n):
        if t >> i & 1:
            letter = 0 if e >> i & 1 else 1
        else:
            letter = 1 if e >> (i + 1) & 1 else 0
        bits |= letter << i
    return AbWord(n, bits)


# -- evaluation --------------------------------------------------------------


def eval_xy(f: NcPoly, a_val: XPoly, b_val: XPoly, y_to: XPoly) -> XPoly:
    """Substitute ``y -> y_to``, ``a -> a_val``, ``b -> b_val`` into ``Z[x]``."""
    total = XPoly.zero()
    a_pows = [XPoly.one()]
    b_pows = [XPoly.one()]
    for _ in range(f.degree):
        a_pows.append(a_pows[-1] * a_val)
        b_pows.append(b_pows[-1] * b_val)
    for w, c in f.terms.items():
        nb = w.count_b()
        total = total + c(y_to) * a_pows[w.length - nb] * b_pows[nb]
    return total


def omega_ev_point(f: NcPoly) -> XPoly:
    """``f`` at ``y -> -x, a -> 1, b -> x``."""
    x = XPoly.gen()
    return eval_xy(f, XPoly.one(), x, -x)
