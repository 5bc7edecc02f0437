"""Dense univariate polynomials with integer coefficients.

``YPoly`` is the coefficient ring of the noncommutative polynomials, ``XPoly``
holds Chow polynomials and their gamma expansions.  Both share the same
implementation and differ only in the variable name used for rendering.
Coefficients are stored in ascending order with trailing zeros stripped, so the
zero polynomial is the empty tuple.
"""

from __future__ import annotations

from typing import Iterable, Union

from .errors import InexactDivision

Scalar = int


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    var = "t"
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _trim(int(c) for c in coeffs)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c: int):
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1):
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def gen(cls):
        return cls((0, 1))

    @classmethod
    def geometric(cls, k: int):
        """Return ``1 + t + ... + t^(k-1)``, i.e. ``(1 - t^k)/(1 - t)``."""
        return cls([1] * k)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return type(self) is type(other) and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((type(self).__name__, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if type(other) is not type(self):
                raise TypeError(f"cannot mix {type(self).__name__} and {type(other).__name__}")
            return other
        if isinstance(other, int):
            return type(self).constant(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)(c * other for c in self.coeffs)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return type(self)()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, z in enumerate(b):
                    out[i + j] += x * z
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = type(self).one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Long division over the integers; the divisor must be monic up to sign."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) <= dd:
            return type(self)(), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise InexactDivision(f"leading coefficient {lead} does not divide {c}")
            quot[i - dd] = q
            for j, dc in enumerate(divisor.coeffs):
                rem[i - dd + j] -= q * dc
        return type(self)(quot), type(self)(rem)

    def exact_div(self, divisor) -> "Poly":
        q, r = self.divmod(divisor)
        if r:
            raise InexactDivision(f"({self}) / ({divisor}) leaves remainder {r}")
        return q

    # -- evaluation and substitution --------------------------------------

    def __call__(self, value):
        """Horner evaluation at an int or at another polynomial."""
        if isinstance(value, Poly):
            acc = type(value)()
        else:
            acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def substitute(self, value: "Poly") -> "Poly":
        return self(value)

    def reciprocal(self, degree: int | None = None) -> "Poly":
        """Return ``t^d * p(1/t)`` for ``d = degree`` (default: own degree)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reciprocal degree below polynomial degree")
        cs = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return type(self)(reversed(cs))

    def is_palindromic(self, degree: int | None = None) -> bool:
        return self == self.reciprocal(degree)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return render_poly(self.coeffs, self.var)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)!r})"


class YPoly(Poly):
    var = "y"
    __slots__ = ()


class XPoly(Poly):
    var = "x"
    __slots__ = ()


PolyLike = Union[Poly, int]


def render_poly(coeffs: Iterable[int], var: str) -> str:
    """Ascending powers, zero terms omitted, e.g. ``1 + 2y - y^3``."""
    parts: list[str] = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"
