"""The autonomous operator and formal flows of ``y' = f(y)``.

Given the jet ``(f, df, ..., d^(m-1) f)`` the operator produces
``A_1, ..., A_m`` with

    A_1 = f,    A_{n+1} = Y_n(A_1, ..., A_n; df, ..., d^n f),

which are the successive time derivatives of the solution through ``x``.
The flow is ``Phi(t) = x + sum_n A_n t**n / n!``.

Only ring operations are used, so the same code runs over scalars (a jet
evaluated at a point) and over truncated series in ``x`` (a symbolic jet).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Sequence

from .bell import complete_bell
from .rings import Ring, infer_ring
from .series import HurwitzSeries, Jet, evaluate, hurwitz_expansion

__all__ = [
    "FlowSeries",
    "TrajectorySample",
    "autonomous_operator",
    "flow_series",
    "flow_symbolic",
    "flow_eval",
    "trajectory",
    "evaluate_flow_at",
]


def autonomous_operator(jet: Sequence) -> list:
    """``[A_1, ..., A_m]`` for a jet of length ``m``.

    ``A_{n+1}`` needs ``d^n f``, so a jet of length ``m`` determines exactly
    ``m`` coefficients.
    """
    values = list(jet)
    if not values:
        raise ValueError("the jet must be nonempty")
    A = [values[0]]
    for n in range(1, len(values)):
        A.append(complete_bell(n, A, values[1:]))
    return A


@dataclass(frozen=True)
class FlowSeries:
    """Truncated flow ``base + sum_{n=1}^{order} A_n t**n / n!``."""

    base: Any
    coeffs: tuple
    ring: Ring
    label: str | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def as_series(self) -> HurwitzSeries:
        """The flow as a Hurwitz series in ``t`` (constant term ``base``)."""
        return HurwitzSeries((self.base, *self.coeffs), self.ring)


@dataclass(frozen=True)
class TrajectorySample:
    t_values: tuple
    points: tuple

    def __iter__(self):
        return iter(zip(self.t_values, self.points))

    def __len__(self):
        return len(self.t_values)


def flow_series(x, jet: Sequence, ring: Ring | None = None) -> FlowSeries:
    """Flow through ``x`` given the jet of ``f`` at ``x``.

    Whether the jet values really are derivatives of one ``f`` at ``x`` is
    the caller's responsibility.
    """
    if ring is None:
        ring = jet.ring if isinstance(jet, Jet) and jet.ring is not None else infer_ring(
            [x, *jet]
        )
    x = ring.coerce(x)
    A = autonomous_operator([ring.coerce(v) for v in jet])
    return FlowSeries(x, tuple(A), ring)


def flow_symbolic(f: HurwitzSeries, depth: int) -> FlowSeries:
    """Flow of ``y' = f(y)`` with coefficients that are series in ``x``.

    Uses the jet ``(f, ..., d^(depth-1) f)``, cut to the common order
    ``f.order - depth + 1``; the base point is the series ``x`` itself.
    """
    if not isinstance(depth, int) or depth < 1:
        raise ValueError("depth must be a positive integer")
    if depth > f.order:
        raise ValueError(f"depth {depth} exceeds the series order {f.order}")
    jet = hurwitz_expansion(f, depth - 1).truncated()
    ring = jet.ring
    x = HurwitzSeries.variable(ring.order, ring.base)
    return FlowSeries(x, tuple(autonomous_operator(jet.values)), ring)


def evaluate_flow_at(flow: FlowSeries, c) -> FlowSeries:
    """Apply the evaluation map ``x -> c`` to a symbolic flow's coefficients."""
    base_ring = flow.ring.base
    coeffs = tuple(evaluate(A, c) for A in flow.coeffs)
    return FlowSeries(evaluate(flow.base, c), coeffs, base_ring)


def flow_eval(flow: FlowSeries, t):
    """``base + sum A_n t**n / n!``, exactly."""
    if not flow.ring.integer_division:
        raise TypeError(f"flow evaluation needs exact integer division; {flow.ring.name} lacks it")
    t = Fraction(t)
    total = flow.base
    if t == 0:
        return total
    power = Fraction(1)
    for n, A in enumerate(flow.coeffs, start=1):
        power *= t
        total = total + A * (power / factorial(n))
    return total


def trajectory(flow: FlowSeries, t_values: Sequence) -> TrajectorySample:
    ts = tuple(Fraction(t) for t in t_values)
    return TrajectorySample(ts, tuple(flow_eval(flow, t) for t in ts))
