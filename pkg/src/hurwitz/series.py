"""Truncated Hurwitz series (exponential generating functions).

A :class:`HurwitzSeries` of order ``N`` stores ``a_0, ..., a_N`` and stands
for ``sum a_n x**n / n!``. Because ``a_n`` is the n-th derivative at 0, the
derivative is a left shift and the product is the binomial convolution

    (f g)_n = sum_k C(n, k) a_k b_{n-k},

both of which stay inside the coefficient ring. Coefficients beyond ``N``
are unknown, never zero: :func:`delta` drops the order by one instead of
padding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from numbers import Rational
from typing import Any, Iterable, Sequence

from .rings import (
    RATIONALS,
    NormedRing,
    Ring,
    infer_ring,
    ipow,
    ring_by_name,
)

__all__ = [
    "HurwitzSeries",
    "SeriesRing",
    "Jet",
    "series_add",
    "series_mul",
    "delta",
    "hurwitz_expansion",
    "evaluate",
    "tail_norm_bound",
    "series_to_json",
    "series_from_json",
    "jet_to_json",
    "jet_from_json",
]


class HurwitzSeries:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable, ring: Ring | None = None):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least one coefficient")
        if ring is None:
            ring = infer_ring(coeffs)
        object.__setattr__(self, "coeffs", tuple(ring.coerce(c) for c in coeffs))
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("HurwitzSeries is immutable")

    @classmethod
    def constant(cls, c, order: int, ring: Ring = RATIONALS) -> HurwitzSeries:
        return cls([ring.coerce(c)] + [ring.zero] * order, ring)

    @classmethod
    def variable(cls, order: int, ring: Ring = RATIONALS) -> HurwitzSeries:
        """The series ``x`` truncated at ``order``."""
        coeffs = [ring.zero] * (order + 1)
        if order >= 1:
            coeffs[1] = ring.one
        return cls(coeffs, ring)

    @classmethod
    def from_taylor(cls, taylor: Sequence, order: int, ring: Ring = RATIONALS):
        """Build from ordinary Taylor coefficients ``c_n`` (``a_n = n! c_n``).

        Missing coefficients up to ``order`` are taken to be zero, so this is
        the natural constructor for polynomials.
        """
        if len(taylor) > order + 1 and any(t != 0 for t in taylor[order + 1:]):
            raise ValueError("polynomial degree exceeds the truncation order")
        coeffs = []
        for n in range(order + 1):
            c = ring.coerce(taylor[n]) if n < len(taylor) else ring.zero
            coeffs.append(factorial(n) * c)
        return cls(coeffs, ring)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def parent(self) -> SeriesRing:
        return SeriesRing(self.ring, self.order)

    def truncate(self, order: int) -> HurwitzSeries:
        if order > self.order or order < 0:
            raise ValueError(f"cannot truncate order {self.order} series to {order}")
        return HurwitzSeries(self.coeffs[: order + 1], self.ring)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def _scalar(self, other):
        """``other`` coerced into the coefficient ring, or None."""
        if isinstance(other, HurwitzSeries) and other.parent != self.ring:
            return None
        try:
            return self.ring.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        if isinstance(other, HurwitzSeries) and other.parent == self.parent:
            return series_add(self, other)
        s = self._scalar(other)
        if s is None:
            return NotImplemented
        return HurwitzSeries((self.coeffs[0] + s,) + self.coeffs[1:], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return HurwitzSeries((-c for c in self.coeffs), self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HurwitzSeries) and other.parent == self.parent:
            return series_mul(self, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return HurwitzSeries((other * c for c in self.coeffs), self.ring)
        s = self._scalar(other)
        if s is None:
            return NotImplemented
        return HurwitzSeries((c * s for c in self.coeffs), self.ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not self.ring.integer_division:
            return NotImplemented
        if isinstance(other, Rational) and not isinstance(other, bool):
            return HurwitzSeries((c / other for c in self.coeffs), self.ring)
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return self.parent.one if e == 0 else ipow(self, e)

    def __eq__(self, other):
        if isinstance(other, HurwitzSeries):
            return self.ring == other.ring and self.coeffs == other.coeffs
        s = self._scalar(other)
        if s is None:
            return NotImplemented
        return self == HurwitzSeries.constant(s, self.order, self.ring)

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def __repr__(self):
        return f"HurwitzSeries({list(self.coeffs)!r}, ring={self.ring.name})"


@dataclass(frozen=True, eq=True)
class SeriesRing(Ring):
    """Truncated Hurwitz series of a fixed order over ``base``."""

    base: Ring
    order: int

    @property
    def name(self) -> str:
        return f"series[{self.base.name}, {self.order}]"

    @property
    def integer_division(self) -> bool:
        return self.base.integer_division

    @property
    def zero(self):
        return HurwitzSeries([self.base.zero] * (self.order + 1), self.base)

    @property
    def one(self):
        return HurwitzSeries.constant(self.base.one, self.order, self.base)

    def coerce(self, value):
        if isinstance(value, HurwitzSeries):
            if value.parent != self:
                raise TypeError(f"series of {value.parent.name} is not in {self.name}")
            return value
        return HurwitzSeries.constant(self.base.coerce(value), self.order, self.base)

    def contains(self, value):
        return isinstance(value, HurwitzSeries) and value.parent == self

    def __repr__(self):
        return f"<ring {self.name}>"


def _check_compatible(f: HurwitzSeries, g: HurwitzSeries):
    if f.ring != g.ring:
        raise ValueError(f"ring mismatch: {f.ring.name} vs {g.ring.name}")
    if f.order != g.order:
        raise ValueError(f"order mismatch: {f.order} vs {g.order}")


def series_add(f: HurwitzSeries, g: HurwitzSeries) -> HurwitzSeries:
    _check_compatible(f, g)
    return HurwitzSeries((a + b for a, b in zip(f.coeffs, g.coeffs)), f.ring)


def series_mul(f: HurwitzSeries, g: HurwitzSeries) -> HurwitzSeries:
    """Binomial convolution, truncated at the common order."""
    _check_compatible(f, g)
    a, b = f.coeffs, g.coeffs
    out = []
    for n in range(f.order + 1):
        acc = a[0] * b[n]
        for k in range(1, n + 1):
            acc = acc + comb(n, k) * (a[k] * b[n - k])
        out.append(acc)
    return HurwitzSeries(out, f.ring)


def delta(f: HurwitzSeries) -> HurwitzSeries:
    if f.order < 1:
        raise ValueError("cannot differentiate an order-0 truncation")
    return HurwitzSeries(f.coeffs[1:], f.ring)


class Jet:
    """Derivative values ``(v_0, ..., v_m)``, usually ``v_k = d^k f(c)``.

    ``ring`` is the common ring of the values. A jet of series produced by
    :func:`hurwitz_expansion` has entries of decreasing order and therefore
    no common ring; its ``ring`` is None until :meth:`truncated` is used.
    """

    __slots__ = ("values", "ring")

    def __init__(self, values: Iterable, ring: Ring | None = None):
        values = tuple(values)
        if not values:
            raise ValueError("a jet needs at least one value")
        if ring is None and _mixed_orders(values):
            object.__setattr__(self, "values", values)
            object.__setattr__(self, "ring", None)
            return
        if ring is None:
            ring = infer_ring(values)
        object.__setattr__(self, "values", tuple(ring.coerce(v) for v in values))
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    def truncated(self) -> Jet:
        """Series entries cut to their smallest common order."""
        if self.ring is not None:
            return self
        order = min(v.order for v in self.values)
        return Jet(v.truncate(order) for v in self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Jet({list(self.values)!r})"


def _mixed_orders(values) -> bool:
    if not all(isinstance(v, HurwitzSeries) for v in values):
        return False
    return len({(v.ring, v.order) for v in values}) > 1


def hurwitz_expansion(f: HurwitzSeries, depth: int) -> Jet:
    """``(f, df, ..., d^depth f)``; entry ``k`` has order ``N - k``."""
    if depth < 0 or depth > f.order:
        raise ValueError(f"depth must lie in [0, {f.order}], got {depth}")
    out = [f]
    for _ in range(depth):
        out.append(delta(out[-1]))
    return Jet(out)


def evaluate(f: HurwitzSeries, c) -> Any:
    """Exact ``sum_{n<=N} a_n c**n / n!``.

    Defined for any ``c``; only rings with exact division by integers are
    supported.
    """
    ring = f.ring
    if not ring.integer_division:
        raise TypeError(f"evaluation needs exact integer division; {ring.name} lacks it")
    c = ring.coerce(c)
    total = f.coeffs[0]
    if c == ring.zero:
        return total
    power = ring.one
    for n in range(1, f.order + 1):
        power = power * c
        total = total + (f.coeffs[n] * power) / factorial(n)
    return total


def tail_norm_bound(f: HurwitzSeries, c_norm) -> Fraction:
    """``max_n |a_n / n!|`` over the stored coefficients.

    This is the series norm restricted to the truncation, hence a lower bound
    for the norm of any series extending ``f``. ``c_norm`` is the norm of the
    intended evaluation point and must not exceed 1.
    """
    c_norm = Fraction(c_norm)
    if c_norm < 0:
        raise ValueError("norm must be nonnegative")
    if c_norm > 1:
        raise ValueError(f"evaluation point norm {c_norm} exceeds 1")
    if not isinstance(f.ring, NormedRing):
        raise TypeError(f"{f.ring.name} is not a normed ring")
    return max(f.ring.norm(a) / factorial(n) for n, a in enumerate(f.coeffs))


def series_to_json(f: HurwitzSeries) -> dict:
    return {
        "ring": f.ring.name,
        "order": f.order,
        "coeffs": [f.ring.format(c) for c in f.coeffs],
    }


def series_from_json(obj: dict) -> HurwitzSeries:
    ring = ring_by_name(obj.get("ring", "rational"))
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list):
        raise ValueError("coeffs must be a list")
    f = HurwitzSeries([ring.parse(c) for c in coeffs], ring)
    if "order" in obj and obj["order"] != f.order:
        raise ValueError(f"order {obj['order']} does not match {len(coeffs)} coefficients")
    return f


def jet_to_json(jet: Jet) -> dict:
    return {"ring": jet.ring.name, "values": [jet.ring.format(v) for v in jet.values]}


def jet_from_json(obj: dict) -> Jet:
    if not isinstance(obj, dict):
        raise ValueError("jet JSON must be an object")
    ring = ring_by_name(obj.get("ring", "rational"))
    values = obj.get("values")
    if not isinstance(values, list) or not values:
        raise ValueError("jet JSON needs a nonempty 'values' list")
    return Jet([ring.parse(v) for v in values], ring)
