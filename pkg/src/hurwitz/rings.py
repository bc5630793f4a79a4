"""Coefficient rings.

Every algorithm in this package works over a commutative ring whose elements
support ``+``, unary and binary ``-``, ``*``, ``==`` and multiplication by a
Python ``int``. A :class:`Ring` object supplies what the elements themselves
cannot: the zero and one, parsing/formatting, and (for normed rings) the norm.

Three concrete rings are provided:

* :data:`RATIONALS` -- ``fractions.Fraction`` with the absolute value.
* :data:`GAUSSIAN` -- :class:`GaussianRational` with the 1-norm ``|a| + |b|``.
* :data:`INTEGERS` -- plain ``int``; normed, but without exact division.
"""

from __future__ import annotations

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any

__all__ = [
    "Ring",
    "NormedRing",
    "RationalRing",
    "IntegerRing",
    "GaussianRing",
    "GaussianRational",
    "RATIONALS",
    "GAUSSIAN",
    "INTEGERS",
    "parse_rational",
    "format_rational",
    "rational_norm",
    "gaussian_norm",
    "ring_by_name",
    "infer_ring",
    "ipow",
]

_RATIONAL_TEXT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value: Any) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a Python int into a reduced Fraction.

    Floats and decimal strings are rejected: exact inputs only.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"not a rational: {value!r}")
    m = _RATIONAL_TEXT.match(value)
    if m is None:
        raise ValueError(f"not a rational: {value!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {value!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction | int) -> str:
    return str(Fraction(q))


def ipow(x, e: int):
    """``x**e`` for ``e >= 1`` by repeated squaring, using only ``*``."""
    if e < 1:
        raise ValueError("exponent must be >= 1")
    result = None
    base = x
    while e:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e:
            base = base * base
    return result


@dataclass(frozen=True)
class GaussianRational:
    """An element ``re + im*i`` of Q[i]."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _lift(other) -> GaussianRational | None:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return GaussianRational(Fraction(other))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by rationals only; Q[i] inverses are not needed anywhere
        if isinstance(other, Rational) and not isinstance(other, bool):
            q = Fraction(other)
            return GaussianRational(self.re / q, self.im / q)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return GaussianRational(1) if e == 0 else ipow(self, e)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def norm(self) -> Fraction:
        return abs(self.re) + abs(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


def rational_norm(x: Fraction | int) -> Fraction:
    return abs(Fraction(x))


def gaussian_norm(z: GaussianRational) -> Fraction:
    """The 1-norm ``|re| + |im|``; submultiplicative, rational-valued."""
    return z.norm()


class Ring(ABC):
    """A commutative ring with identity, described by its operations."""

    name: str
    #: whether ``x / n`` is exact for every nonzero int ``n``
    integer_division: bool = True

    @property
    @abstractmethod
    def zero(self): ...

    @property
    @abstractmethod
    def one(self): ...

    @abstractmethod
    def coerce(self, value):
        """Bring an int (or an element of a subring) into this ring."""

    @abstractmethod
    def contains(self, value) -> bool: ...

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def pow(self, x, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        return self.one if e == 0 else ipow(x, e)

    def from_int(self, n: int):
        return n * self.one

    def parse(self, value):
        raise NotImplementedError(f"{self.name} has no textual form")

    def format(self, x):
        raise NotImplementedError(f"{self.name} has no textual form")

    def __repr__(self):
        return f"<ring {self.name}>"


class NormedRing(Ring):
    """Ring with a rational-valued norm obeying the normed-ring axioms:

    ``|x| = 0`` iff ``x = 0``, the triangle inequality, ``|-x| = |x|`` and
    ``|xy| <= |x||y|``. ``|1| = 1`` is not part of the contract.
    """

    @abstractmethod
    def norm(self, x) -> Fraction: ...


class RationalRing(NormedRing):
    name = "rational"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, Rational):
            raise TypeError(f"cannot coerce {value!r} into {self.name}")
        return Fraction(value)

    def contains(self, value):
        return isinstance(value, Fraction)

    def norm(self, x):
        return rational_norm(x)

    def parse(self, value):
        return parse_rational(value)

    def format(self, x):
        return format_rational(x)


class IntegerRing(NormedRing):
    """The integers. Exists mainly to exercise division-free code paths."""

    name = "integer"
    integer_division = False

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def coerce(self, value):
        if isinstance(value, bool):
            raise TypeError(f"cannot coerce {value!r} into {self.name}")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def contains(self, value):
        return isinstance(value, int) and not isinstance(value, bool)

    def norm(self, x):
        return Fraction(abs(x))

    def parse(self, value):
        q = parse_rational(value)
        if q.denominator != 1:
            raise ValueError(f"not an integer: {value!r}")
        return q.numerator

    def format(self, x):
        return str(x)


class GaussianRing(NormedRing):
    name = "gaussian"

    @property
    def zero(self):
        return GaussianRational(0, 0)

    @property
    def one(self):
        return GaussianRational(1, 0)

    def coerce(self, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Rational) and not isinstance(value, bool):
            return GaussianRational(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def contains(self, value):
        return isinstance(value, GaussianRational)

    def norm(self, x):
        return gaussian_norm(x)

    def parse(self, value):
        """Accept ``[re, im]`` (textual rationals) or a bare rational."""
        if isinstance(value, (list, tuple)):
            if len(value) != 2:
                raise ValueError(f"gaussian value must be a [re, im] pair: {value!r}")
            return GaussianRational(parse_rational(value[0]), parse_rational(value[1]))
        return GaussianRational(parse_rational(value))

    def format(self, x):
        return [format_rational(x.re), format_rational(x.im)]


RATIONALS = RationalRing()
GAUSSIAN = GaussianRing()
INTEGERS = IntegerRing()

_BY_NAME = {r.name: r for r in (RATIONALS, GAUSSIAN, INTEGERS)}


def ring_by_name(name: str) -> Ring:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(
            f"unknown ring {name!r}; expected one of {sorted(_BY_NAME)}"
        ) from None


def infer_ring(values) -> Ring:
    """Smallest provided ring containing every value of ``values``.

    Series values resolve to their own :class:`~hurwitz.series.SeriesRing`.
    Plain ints resolve to the rationals so that numeric code stays exact.
    """
    ring: Ring | None = None
    for v in values:
        parent = getattr(v, "parent", None)
        if parent is not None:
            if ring is not None and ring is not parent and ring != parent:
                raise TypeError("values from different series rings")
            ring = parent
        elif isinstance(v, GaussianRational):
            if ring is not None and ring not in (RATIONALS, GAUSSIAN):
                raise TypeError(f"cannot mix {ring.name} and gaussian values")
            ring = GAUSSIAN
        elif isinstance(v, Rational) and not isinstance(v, bool):
            if ring is None:
                ring = RATIONALS
            elif ring not in (RATIONALS, GAUSSIAN):
                raise TypeError(f"cannot mix {ring.name} and rational values")
        else:
            raise TypeError(f"unsupported ring value {v!r}")
    return ring if ring is not None else RATIONALS
