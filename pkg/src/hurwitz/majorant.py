"""Majorant bounds for flows over normed rings.

If ``|d^n f(c)| <= a_n`` for every ``n``, the nonnegative integer structure
of the Bell polynomials propagates the domination through the autonomous
recursion:

    |A_n(f at c)| <= A_n(a_0, ..., a_{n-1}),

and termwise ``|Phi(t, c) - c| <= Phi(t, 0, a)`` for ``t >= 0``. This module
checks the coefficientwise inequality exactly, order by order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import NamedTuple, Sequence

from .autonomous import autonomous_operator
from .closed_forms import falling_factorial
from .rings import NormedRing, Ring, format_rational, infer_ring, parse_rational
from .series import Jet

__all__ = [
    "MajorantSpec",
    "Domination",
    "HypothesisViolation",
    "CertificationRecord",
    "CertificationReport",
    "norm_jet",
    "majorant_values",
    "check_domination",
    "bound_series",
    "certify",
    "bound_flow_eval",
]

KINDS = ("exp", "fact", "binom", "explicit")


class HypothesisViolation(ValueError):
    """The jet's norms are not dominated by the majorant.

    This is bad input, not a failure of the bound.
    """

    def __init__(self, index: int, norm: Fraction, bound: Fraction):
        self.index = index
        self.norm = norm
        self.bound = bound
        super().__init__(
            f"hypothesis violated at n={index}: |v_n| = {norm} > a_n = {bound}"
        )


@dataclass(frozen=True)
class MajorantSpec:
    """A majorant sequence ``a_0, a_1, ...``.

    ``exp:a`` gives ``a**n`` (``a > 0``), ``fact`` gives ``n!``, ``binom:a``
    gives ``1`` followed by the falling factorials of ``a`` and ``explicit``
    wraps a given finite sequence.
    """

    kind: str
    a: Fraction | None = None
    seq: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown majorant {self.kind!r}; expected one of {KINDS}")
        if self.kind in ("exp", "binom"):
            if self.a is None:
                raise ValueError(f"majorant {self.kind!r} needs a parameter")
            object.__setattr__(self, "a", Fraction(self.a))
        if self.kind == "exp" and self.a <= 0:
            raise ValueError("power majorant requires a > 0")
        if self.kind == "binom" and self.a == 1:
            raise ValueError("binomial majorant requires a != 1")
        if self.kind == "explicit":
            if self.seq is None:
                raise ValueError("explicit majorant needs a sequence")
            seq = tuple(Fraction(v) for v in self.seq)
            if any(v < 0 for v in seq):
                raise ValueError("majorant entries must be nonnegative")
            object.__setattr__(self, "seq", seq)

    @classmethod
    def parse(cls, text: str, explicit: Sequence | None = None) -> MajorantSpec:
        """Parse ``exp:a``, ``fact``, ``binom:a`` or ``explicit``.

        For ``explicit`` the sequence is passed separately (the CLI reads it
        from a file).
        """
        kind, _, param = text.strip().partition(":")
        if kind == "fact":
            if param:
                raise ValueError("the factorial majorant takes no parameter")
            return cls("fact")
        if kind == "explicit":
            if explicit is None:
                raise ValueError("explicit majorant needs a sequence")
            return cls("explicit", seq=tuple(parse_rational(v) for v in explicit))
        if kind in ("exp", "binom"):
            if not param:
                raise ValueError(f"majorant {kind!r} needs a parameter, e.g. {kind}:2")
            return cls(kind, parse_rational(param))
        raise ValueError(f"unknown majorant {text!r}")

    @property
    def t_domain(self) -> str | None:
        """Where the closed-form majorant flow is valid (None if unknown)."""
        if self.kind == "exp":
            return f"0 <= t < {format_rational(1 / self.a)}  (|a t| < 1, a > 0)"
        if self.kind == "fact":
            return "0 <= t < 1/2  (|2t| < 1)"
        if self.kind == "binom":
            return f"0 <= t < {format_rational(self._binom_radius())}  (|t| < 1, |(1-a) t| < 1)"
        return None

    def _binom_radius(self) -> Fraction:
        return min(Fraction(1), 1 / abs(1 - self.a))

    def t_in_domain(self, t: Fraction) -> bool:
        if t < 0:
            return False
        if self.kind == "exp":
            return self.a * t < 1
        if self.kind == "fact":
            return 2 * t < 1
        if self.kind == "binom":
            return t < self._binom_radius()
        return True

    def __str__(self):
        if self.kind in ("exp", "binom"):
            return f"{self.kind}:{format_rational(self.a)}"
        return self.kind


class Domination(NamedTuple):
    holds: bool
    first_failure: int | None = None

    def __bool__(self):
        return self.holds


def norm_jet(jet: Sequence, ring: Ring | None = None) -> list[Fraction]:
    if ring is None:
        ring = jet.ring if isinstance(jet, Jet) and jet.ring is not None else infer_ring(jet)
    if not isinstance(ring, NormedRing):
        raise TypeError(f"{ring.name} is not a normed ring")
    return [ring.norm(ring.coerce(v)) for v in jet]


def majorant_values(spec: MajorantSpec, upto: int) -> list[Fraction]:
    """``(a_0, ..., a_upto)``."""
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    if spec.kind == "exp":
        out = [spec.a**n for n in range(upto + 1)]
    elif spec.kind == "fact":
        out = [Fraction(factorial(n)) for n in range(upto + 1)]
    elif spec.kind == "binom":
        out = [falling_factorial(spec.a, n) for n in range(upto + 1)]
    else:
        if len(spec.seq) < upto + 1:
            raise ValueError(
                f"explicit majorant has {len(spec.seq)} entries, need {upto + 1}"
            )
        out = list(spec.seq[: upto + 1])
    for n, v in enumerate(out):
        if v < 0:
            raise ValueError(
                f"majorant {spec} is negative at n={n} ({v}); "
                "falling factorials stay nonnegative only for integer a >= 0"
            )
    return out


def check_domination(norms: Sequence[Fraction], majorant: Sequence[Fraction]) -> Domination:
    if len(norms) != len(majorant):
        raise ValueError(f"length mismatch: {len(norms)} norms vs {len(majorant)} bounds")
    for n, (x, a) in enumerate(zip(norms, majorant)):
        if x > a:
            return Domination(False, n)
    return Domination(True)


def bound_series(majorant: Sequence[Fraction]) -> list[Fraction]:
    """``A_1(a_0), ..., A_N(a_0..a_{N-1})`` for a majorant of length ``N``."""
    values = [Fraction(v) for v in majorant]
    if any(v < 0 for v in values):
        raise ValueError("majorant entries must be nonnegative")
    return autonomous_operator(values)


@dataclass(frozen=True)
class CertificationRecord:
    n: int
    actual_norm: Fraction
    bound: Fraction
    holds: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "actual_norm": format_rational(self.actual_norm),
            "bound": format_rational(self.bound),
            "holds": self.holds,
        }


@dataclass(frozen=True)
class CertificationReport:
    per_n: tuple[CertificationRecord, ...]
    overall: bool
    t_domain: str | None = None
    hypothesis_norms: tuple[Fraction, ...] = field(default=())
    majorant: tuple[Fraction, ...] = field(default=())

    @property
    def actual(self) -> list[Fraction]:
        return [r.actual_norm for r in self.per_n]

    @property
    def bounds(self) -> list[Fraction]:
        return [r.bound for r in self.per_n]

    def tight(self) -> bool:
        """True when every bound is attained."""
        return all(r.actual_norm == r.bound for r in self.per_n)

    def to_dict(self) -> dict:
        return {
            "overall": self.overall,
            "t_domain": self.t_domain,
            "hypothesis_norms": [format_rational(v) for v in self.hypothesis_norms],
            "majorant": [format_rational(v) for v in self.majorant],
            "per_n": [r.to_dict() for r in self.per_n],
        }


def certify(jet: Sequence, spec: MajorantSpec, ring: Ring | None = None) -> CertificationReport:
    """Check ``|A_n(jet)| <= A_n(majorant)`` for ``n = 1 .. len(jet)``.

    Raises :class:`HypothesisViolation` if the jet is not dominated by the
    majorant in the first place.
    """
    if ring is None:
        ring = jet.ring if isinstance(jet, Jet) and jet.ring is not None else infer_ring(jet)
    values = [ring.coerce(v) for v in jet]
    if not values:
        raise ValueError("the jet must be nonempty")
    norms = norm_jet(values, ring)
    majorant = majorant_values(spec, len(values) - 1)
    dom = check_domination(norms, majorant)
    if not dom:
        i = dom.first_failure
        raise HypothesisViolation(i, norms[i], majorant[i])

    actual = [ring.norm(A) for A in autonomous_operator(values)]
    bounds = bound_series(majorant)
    records = tuple(
        CertificationRecord(n, x, b, x <= b)
        for n, (x, b) in enumerate(zip(actual, bounds), start=1)
    )
    return CertificationReport(
        per_n=records,
        overall=all(r.holds for r in records),
        t_domain=spec.t_domain,
        hypothesis_norms=tuple(norms),
        majorant=tuple(majorant),
    )


def bound_flow_eval(
    bound_coeffs: Sequence[Fraction], t, spec: MajorantSpec | None = None
) -> Fraction:
    """``sum_n B_n t**n / n!`` for the bound coefficients ``B_1, B_2, ...``.

    With ``spec`` given, ``t`` must lie in its closed-form validity interval.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if spec is not None and not spec.t_in_domain(t):
        raise ValueError(f"t = {t} outside the validity interval {spec.t_domain}")
    total = Fraction(0)
    power = Fraction(1)
    for n, B in enumerate(bound_coeffs, start=1):
        B = Fraction(B)
        if B < 0:
            raise ValueError("bound coefficients must be nonnegative")
        power *= t
        total += B * power / factorial(n)
    return total
