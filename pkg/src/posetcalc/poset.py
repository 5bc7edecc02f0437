"""Finite graded bounded posets: construction, intervals, Möbius data, chains."""

from __future__ import annotations

import random
from collections import deque
from typing import Hashable, Iterable, Iterator, Sequence, Union

from .errors import (
    CyclicCovers,
    InvalidChain,
    InvalidPoset,
    NotBounded,
    NotComparable,
    NotGraded,
    RankTooLarge,
    UnknownElement,
)
from .polynomial import YPoly

MAX_RANK = 32

ElementRef = Union[int, str]
Chain = tuple[int, ...]


class Poset:
    """A validated finite graded bounded poset.

    Elements are addressed by index (position in ``names``).  Construction goes
    through :func:`build_poset`; instances are treated as immutable and only
    carry lazily filled caches.
    """

    def __init__(self, names, covers, rank, up, down, above):
        self.names: tuple[str, ...] = tuple(names)
        self.covers: tuple[tuple[int, int], ...] = tuple(covers)
        self.rank: tuple[int, ...] = tuple(rank)
        self.up: tuple[tuple[int, ...], ...] = up
        self.down: tuple[tuple[int, ...], ...] = down
        # above[u] is a bitmask of all v with u <= v
        self.above: tuple[int, ...] = above
        self.bottom = self.rank.index(0)
        self.top = max(range(len(self.names)), key=lambda i: self.rank[i])
        self.n = self.rank[self.top]
        self._index = {name: i for i, name in enumerate(self.names)}
        self._mobius_rows: dict[int, dict[int, int]] = {}
        self._by_rank = tuple(sorted(range(len(self.names)), key=lambda i: (self.rank[i], i)))

    def __len__(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, rank {self.n})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.names == other.names and set(self.covers) == set(other.covers)

    def __hash__(self) -> int:
        return hash((self.names, frozenset(self.covers)))

    def index(self, x: ElementRef) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            if not 0 <= x < len(self.names):
                raise UnknownElement(f"element index {x} out of range")
            return x
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    def leq(self, u: int, v: int) -> bool:
        return bool(self.above[u] >> v & 1)

    def lt(self, u: int, v: int) -> bool:
        return u != v and self.leq(u, v)

    def between(self, u: int, w: int) -> list[int]:
        """Elements ``v`` with ``u <= v <= w``, sorted by rank then index."""
        return [v for v in self._by_rank if self.leq(u, v) and self.leq(v, w)]

    def open_interval(self, u: int, w: int) -> list[int]:
        return [v for v in self.between(u, w) if v != u and v != w]

    def elements_by_rank(self) -> tuple[int, ...]:
        return self._by_rank

    def mobius_row(self, u: int) -> dict[int, int]:
        """``{v: mu(u, v)}`` for every ``v >= u``."""
        row = self._mobius_rows.get(u)
        if row is None:
            row = {}
            for v in self._by_rank:
                if not self.leq(u, v):
                    continue
                if v == u:
                    row[v] = 1
                else:
                    row[v] = -sum(m for x, m in row.items() if self.lt(x, v))
            self._mobius_rows[u] = row
        return row

    def is_trivial(self) -> bool:
        return self.n == 0


def build_poset(element_names: Sequence[Hashable], covers: Iterable[tuple]) -> Poset:
    """Validate a cover relation and return the poset it generates.

    ``covers`` lists pairs ``(lower, upper)`` of element names.  Ranks are
    derived by propagating ``rank(0̂) = 0`` upwards along covers.
    """
    names = [str(x) for x in element_names]
    if len(set(names)) != len(names):
        seen = set()
        dup = next(x for x in names if x in seen or seen.add(x))
        raise InvalidPoset(f"duplicate element {dup!r}")
    if not names:
        raise NotBounded("empty poset has no minimum")
    index = {x: i for i, x in enumerate(names)}

    edges: list[tuple[int, int]] = []
    seen_edges = set()
    for pair in covers:
        lo, hi = (str(x) for x in pair)
        for x in (lo, hi):
            if x not in index:
                raise UnknownElement(f"cover ({lo!r}, {hi!r}) references unknown element {x!r}")
        e = (index[lo], index[hi])
        if e[0] == e[1]:
            raise CyclicCovers(f"self-cover on {lo!r}")
        if e not in seen_edges:
            seen_edges.add(e)
            edges.append(e)

    size = len(names)
    up: list[list[int]] = [[] for _ in range(size)]
    down: list[list[int]] = [[] for _ in range(size)]
    for u, v in edges:
        up[u].append(v)
        down[v].append(u)

    # Kahn's algorithm; leftover vertices sit on a cycle
    indeg = [len(d) for d in down]
    queue = deque(i for i in range(size) if indeg[i] == 0)
    topo: list[int] = []
    while queue:
        u = queue.popleft()
        topo.append(u)
        for v in up[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if len(topo) != size:
        stuck = [names[i] for i in range(size) if indeg[i] > 0]
        raise CyclicCovers(f"cover relation has a cycle through {stuck[:5]}")

    minimal = [i for i in range(size) if not down[i]]
    maximal = [i for i in range(size) if not up[i]]
    if len(minimal) != 1:
        raise NotBounded(f"expected one minimal element, found {[names[i] for i in minimal]}")
    if len(maximal) != 1:
        raise NotBounded(f"expected one maximal element, found {[names[i] for i in maximal]}")

    bottom = minimal[0]
    rank: list[int | None] = [None] * size
    rank[bottom] = 0
    queue = deque([bottom])
    while queue:
        u = queue.popleft()
        for v in up[u]:
            r = rank[u] + 1
            if rank[v] is None:
                rank[v] = r
                queue.append(v)
            elif rank[v] != r:
                raise NotGraded(
                    f"cover ({names[u]!r}, {names[v]!r}) is inconsistent with ranks "
                    f"{rank[u]} and {rank[v]}"
                )
    n = rank[maximal[0]]
    if n > MAX_RANK:
        raise RankTooLarge(f"rank {n} exceeds the supported maximum {MAX_RANK}")

    above = [0] * size
    for u in reversed(topo):
        mask = 1 << u
        for v in up[u]:
            mask |= above[v]
        above[u] = mask

    return Poset(
        names,
        edges,
        rank,
        tuple(tuple(sorted(x)) for x in up),
        tuple(tuple(sorted(x)) for x in down),
        tuple(above),
    )


def _check_leq(P: Poset, u: ElementRef, w: ElementRef) -> tuple[int, int]:
    i, j = P.index(u), P.index(w)
    if not P.leq(i, j):
        raise NotComparable(f"{P.names[i]!r} is not below {P.names[j]!r}")
    return i, j


def interval(P: Poset, u: ElementRef, w: ElementRef) -> Poset:
    """Materialize ``[u, w]`` as a poset of its own, keeping element names."""
    i, j = _check_leq(P, u, w)
    members = sorted(P.between(i, j))
    keep = set(members)
    covers = [(P.names[a], P.names[b]) for a, b in P.covers if a in keep and b in keep]
    return build_poset([P.names[v] for v in members], covers)


def mobius(P: Poset, u: ElementRef, w: ElementRef) -> int:
    i, j = _check_leq(P, u, w)
    return P.mobius_row(i)[j]


def interval_poincare(P: Poset, u: int, w: int) -> YPoly:
    """Poincaré polynomial of ``[u, w]`` computed inside ``P``."""
    row = P.mobius_row(u)
    base = P.rank[u]
    coeffs = [0] * (P.rank[w] - base + 1)
    for v, m in row.items():
        if P.leq(v, w):
            k = P.rank[v] - base
            coeffs[k] += m if k % 2 == 0 else -m
    return YPoly(coeffs)


def poincare(P: Poset) -> YPoly:
    """``sum_w mu(0̂, w) (-y)^rk(w)``."""
    return interval_poincare(P, P.bottom, P.top)


def char_poly(P: Poset) -> YPoly:
    """Characteristic polynomial ``sum_w mu(0̂, w) t^(n - rk(w))``.

    Returned as a :class:`YPoly` whose variable is read as ``t``.
    """
    coeffs = [0] * (P.n + 1)
    for v, m in P.mobius_row(P.bottom).items():
        coeffs[P.n - P.rank[v]] += m
    return YPoly(coeffs)


def validate_chain(P: Poset, chain: Sequence[ElementRef]) -> Chain:
    if not chain:
        raise InvalidChain("empty chain")
    idx = tuple(P.index(x) for x in chain)
    if idx[-1] != P.top:
        raise InvalidChain("chain must end in the maximum element")
    for a, b in zip(idx, idx[1:]):
        if not P.lt(a, b):
            raise InvalidChain(f"{P.names[a]!r} < {P.names[b]!r} does not hold")
    return idx


def chain_poincare(P: Poset, chain: Sequence[ElementRef]) -> YPoly:
    idx = validate_chain(P, chain)
    result = YPoly.one()
    for a, b in zip(idx, idx[1:]):
        result = result * interval_poincare(P, a, b)
    return result


def chain_rank_set(P: Poset, chain: Chain) -> int:
    """Bitmask of the ranks of all chain elements except the final ``1̂``."""
    mask = 0
    for v in chain[:-1]:
        mask |= 1 << P.rank[v]
    return mask


def chains_to_top(P: Poset, start: int | None = None) -> Iterator[Chain]:
    """All chains ending in ``1̂``, lexicographic in their index sequences.

    With ``start`` given, only chains whose first element is ``start``.
    """
    size = len(P)
    strictly_above = [
        [v for v in range(size) if v != u and P.leq(u, v)] for u in range(size)
    ]

    def from_(x: int) -> Iterator[Chain]:
        if x == P.top:
            yield (x,)
            return
        for z in strictly_above[x]:
            for tail in from_(z):
                yield (x,) + tail

    if start is not None:
        yield from from_(P.index(start))
        return
    for x in range(size):
        yield from from_(x)


def maximal_chains(P: Poset) -> Iterator[Chain]:
    """Maximal chains ``0̂ ⋖ M_1 ⋖ ... ⋖ 1̂`` in lexicographic index order."""

    def from_(x: int) -> Iterator[Chain]:
        if x == P.top:
            yield (x,)
            return
        for z in P.up[x]:
            for tail in from_(z):
                yield (x,) + tail

    yield from from_(P.bottom)


def random_graded_poset(seed, max_rank: int, max_width: int) -> Poset:
    """Random bounded graded poset built level by level.

    The rank is drawn from ``[1, max_rank]`` and inner level sizes from
    ``[1, max_width]``.  Covers between consecutive levels are sampled with a
    random density and then patched so that every element has a lower and an
    upper cover.  Equal seeds give identical posets.
    """
    if max_rank < 1 or max_width < 1:
        raise ValueError("max_rank and max_width must be at least 1")
    rng = random.Random(seed)
    n = rng.randint(1, max_rank)
    levels: list[list[str]] = [["bot"]]
    for r in range(1, n):
        levels.append([f"r{r}_{j}" for j in range(rng.randint(1, max_width))])
    levels.append(["top"])

    density = rng.choice((0.25, 0.5, 0.75))
    covers: list[tuple[str, str]] = []
    for lower, upper in zip(levels, levels[1:]):
        chosen = {(u, v) for u in lower for v in upper if rng.random() < density}
        for u in lower:
            if not any(e[0] == u for e in chosen):
                chosen.add((u, rng.choice(upper)))
        for v in upper:
            if not any(e[1] == v for e in chosen):
                chosen.add((rng.choice(lower), v))
        covers.extend(sorted(chosen))
    names = [x for level in levels for x in level]
    return build_poset(names, covers)


def incidence_sum(P: Poset) -> YPoly:
    """``sum_w (-y)^rk(w) Poin_[w,1̂](y)``; equals 1 on every bounded graded poset."""
    total = YPoly.zero()
    for w in range(len(P)):
        k = P.rank[w]
        total = total + YPoly.monomial(k, -1 if k % 2 else 1) * interval_poincare(P, w, P.top)
    return total


def poincare_from_charpoly(chi: YPoly, n: int) -> YPoly:
    """``(-y)^n chi(-1/y)`` with denominators cleared."""
    coeffs = [0] * (n + 1)
    for k, c in enumerate(chi.coeffs):
        coeffs[n - k] = c if (n - k) % 2 == 0 else -c
    return YPoly(coeffs)
