"""Three jet families whose flows are known in closed form.

========== ====================== ======================================
family     jet at 0               image of the autonomous operator
========== ====================== ======================================
exp:a      a**n  (f = e^(a z))    a**(n-1) (n-1)!
geom       n!    (f = 1/(1-z))    (-1)**(n+1) 2**n C(1/2, n) n!
binom:a    a(a-1)...(a-n+1)       C(1/(1-a), n) (1-a)**n n!
           (f = (1+z)**a)
========== ====================== ======================================

The binomial family uses *falling* factorials: they are the derivatives of
``(1+z)**a`` at 0 and the only choice for which the image formula holds.
The rising factorial is still available as :func:`pochhammer_rising`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math
from math import factorial

from .autonomous import FlowSeries
from .rings import RATIONALS, format_rational, parse_rational

__all__ = [
    "Family",
    "jet_of_family",
    "rational_binomial",
    "pochhammer_rising",
    "falling_factorial",
    "image_of_family",
    "corollary1_flow",
    "closed_form_float",
    "family_label",
]

KINDS = ("exp", "geom", "binom")


@dataclass(frozen=True)
class Family:
    kind: str
    order: int
    a: Fraction | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {KINDS}")
        if not isinstance(self.order, int) or self.order < 0:
            raise ValueError(f"order must be a nonnegative integer, got {self.order!r}")
        if self.kind == "geom":
            if self.a is not None:
                raise ValueError("the geometric family takes no parameter")
        else:
            if self.a is None:
                raise ValueError(f"family {self.kind!r} needs a parameter")
            object.__setattr__(self, "a", Fraction(self.a))
            if self.kind == "binom" and self.a == 1:
                raise ValueError("binomial family requires a != 1")

    @classmethod
    def parse(cls, text: str, order: int) -> Family:
        """Parse ``exp:a``, ``geom`` or ``binom:a``."""
        kind, _, param = text.strip().partition(":")
        if kind == "geom":
            if param:
                raise ValueError("the geometric family takes no parameter")
            return cls("geom", order)
        if not param:
            raise ValueError(f"family {kind!r} needs a parameter, e.g. {kind}:2")
        return cls(kind, order, parse_rational(param))

    def __str__(self):
        return self.kind if self.a is None else f"{self.kind}:{format_rational(self.a)}"


def falling_factorial(a, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= a - i
    return out


def pochhammer_rising(a, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def rational_binomial(q, n: int) -> Fraction:
    """``C(q, n) = q (q-1) ... (q-n+1) / n!`` for rational ``q``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return falling_factorial(Fraction(q), n) / factorial(n)


def jet_of_family(spec: Family) -> list[Fraction]:
    """``(v_0, ..., v_N)``: derivatives at 0 of the family's ``f``."""
    N = spec.order
    if spec.kind == "exp":
        return [spec.a**n for n in range(N + 1)]
    if spec.kind == "geom":
        return [Fraction(factorial(n)) for n in range(N + 1)]
    return [falling_factorial(spec.a, n) for n in range(N + 1)]


def image_of_family(spec: Family) -> list[Fraction]:
    """``(A_1, ..., A_N)`` from the closed-form formula (no recursion)."""
    out = []
    for n in range(1, spec.order + 1):
        if spec.kind == "exp":
            out.append(spec.a ** (n - 1) * factorial(n - 1))
        elif spec.kind == "geom":
            out.append((-1) ** (n + 1) * 2**n * rational_binomial(Fraction(1, 2), n) * factorial(n))
        else:
            b = 1 - spec.a
            out.append(rational_binomial(1 / b, n) * b**n * factorial(n))
    return out


def family_label(spec: Family) -> str:
    if spec.kind == "geom":
        return "1 - sqrt(1 - 2t)"
    a = spec.a
    if spec.kind == "exp":
        if a == 0:
            return "t"
        return f"(1/({a})) log(1/(1 - ({a})t))"
    b = 1 - a
    return f"(1 + ({b})t)^(1/({b})) - 1"


def corollary1_flow(spec: Family) -> FlowSeries:
    """Flow through 0 whose coefficients are the family's closed-form image."""
    return FlowSeries(Fraction(0), tuple(image_of_family(spec)), RATIONALS, family_label(spec))


def closed_form_float(spec: Family, t: float) -> float:
    """Float value of the family's exact flow at ``t`` (reference only)."""
    if spec.kind == "geom":
        return 2 * t / (1 + math.sqrt(1 - 2 * t))
    a = float(spec.a)
    if spec.kind == "exp":
        if a == 0:
            return t
        return -math.log1p(-a * t) / a
    b = 1 - a
    return math.expm1(math.log1p(b * t) / b)
