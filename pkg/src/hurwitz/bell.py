"""Partitions, Bell polynomials and Faa di Bruno composition of EGFs.

Partial Bell polynomials are evaluated as

    B(n, k) = sum over partitions p of n with k parts of
              c(p) * b_1**j_1 * ... * b_n**j_n

where ``c(p) = n! / (j_1! ... j_n! * 1!**j_1 ... n!**j_n)`` is the number of
set partitions of an n-set with block sizes given by ``p``. ``c(p)`` is an
integer, so only ring addition, multiplication and integer scaling are needed
and the evaluation is valid over any commutative ring.

Sequences ``b`` and ``a`` are 1-indexed mathematically: ``b[0]`` holds ``b_1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .rings import ipow

__all__ = [
    "Partition",
    "enumerate_partitions",
    "partition_count",
    "partial_bell",
    "complete_bell",
    "compose_egf",
]


@dataclass(frozen=True)
class Partition:
    """A partition of ``n`` as a multiplicity vector ``(j_1, ..., j_n)``."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        js = tuple(self.multiplicities)
        if not js or any(j < 0 for j in js):
            raise ValueError(f"invalid multiplicity vector {js!r}")
        if sum(js) < 1:
            raise ValueError("the empty partition is not allowed")
        object.__setattr__(self, "multiplicities", js)

    @property
    def n(self) -> int:
        return sum(i * j for i, j in enumerate(self.multiplicities, start=1))

    @property
    def length(self) -> int:
        """Number of parts, ``j_1 + ... + j_n``."""
        return sum(self.multiplicities)

    @property
    def coefficient(self) -> int:
        """Number of set partitions with this block-size multiset."""
        return _coefficient(self.multiplicities)

    def parts(self) -> list[int]:
        """The parts in decreasing order, e.g. ``[3, 1]`` for ``(1, 0, 1, 0)``."""
        out = []
        for i in range(len(self.multiplicities), 0, -1):
            out.extend([i] * self.multiplicities[i - 1])
        return out

    def __iter__(self):
        return iter(self.multiplicities)


@lru_cache(maxsize=None)
def _coefficient(js: tuple[int, ...]) -> int:
    n = sum(i * j for i, j in enumerate(js, start=1))
    den = 1
    for i, j in enumerate(js, start=1):
        den *= factorial(j) * factorial(i) ** j
    q, r = divmod(factorial(n), den)
    assert r == 0
    return q


def _vectors(n: int, parts: int | None):
    """Yield multiplicity vectors of ``n`` in increasing lexicographic order."""
    js = [0] * n

    def rec(i: int, remaining: int, used: int):
        # i is the 1-based part size currently being assigned
        if i > n:
            if remaining == 0 and (parts is None or used == parts):
                yield tuple(js)
            return
        if remaining == 0:
            if parts is None or used == parts:
                yield tuple(js)
            return
        if remaining < i:
            return
        for j in range(remaining // i + 1):
            if parts is not None and used + j > parts:
                break
            js[i - 1] = j
            yield from rec(i + 1, remaining - i * j, used + j)
        js[i - 1] = 0

    yield from rec(1, n, 0)


@lru_cache(maxsize=256)
def _partitions(n: int, parts: int | None) -> tuple[Partition, ...]:
    return tuple(Partition(v) for v in _vectors(n, parts))


def enumerate_partitions(n: int, parts: int | None = None) -> list[Partition]:
    """All partitions of ``n`` (optionally with exactly ``parts`` parts).

    Multiplicity vectors come out in increasing lexicographic order, so
    ``(0, ..., 0, 1)`` (the one-part partition) is first and ``(n, 0, ...)``
    last.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if parts is not None and not (1 <= parts <= n):
        raise ValueError(f"parts must lie in [1, {n}], got {parts!r}")
    return list(_partitions(n, parts))


def partition_count(n: int) -> int:
    return len(_partitions(n, None))


def _monomial(js: tuple[int, ...], b: Sequence):
    term = None
    for i, j in enumerate(js):
        if j:
            p = ipow(b[i], j)
            term = p if term is None else term * p
    return term


def _check_args(n: int, b: Sequence, name: str = "b"):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if len(b) < n:
        raise ValueError(f"{name} needs at least {n} entries, got {len(b)}")


def partial_bell(n: int, k: int, b: Sequence):
    """Partial Bell polynomial ``B(n, k)`` evaluated at ``b_1, ..., b_n``."""
    _check_args(n, b)
    if not isinstance(k, int) or not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    total = None
    for p in _partitions(n, k):
        term = p.coefficient * _monomial(p.multiplicities, b)
        total = term if total is None else total + term
    return total


def complete_bell(n: int, b: Sequence, a: Sequence):
    """``Y_n(b_1..b_n; a_1..a_n) = sum_k B(n, k)(b) * a_k``.

    Computed in one pass over all partitions of ``n``; each partition with
    ``k`` parts contributes to the ``a_k`` term.
    """
    _check_args(n, b)
    _check_args(n, a, "a")
    total = None
    for p in _partitions(n, None):
        term = p.coefficient * (_monomial(p.multiplicities, b) * a[p.length - 1])
        total = term if total is None else total + term
    return total


def compose_egf(f, g):
    """Truncated EGF of ``f(g(x))`` for ``g`` with zero constant term.

    Coefficient ``n >= 1`` of the result is ``Y_n(g_1..g_n; f_1..f_n)``;
    the constant term is ``f_0``.
    """
    from .series import HurwitzSeries, _check_compatible

    _check_compatible(f, g)
    if g.coeffs[0] != g.ring.zero:
        raise ValueError(
            "compose_egf requires g to have zero constant term; "
            "composition at a nonzero base point is not supported"
        )
    a, b = f.coeffs, g.coeffs
    out = [a[0]]
    for n in range(1, f.order + 1):
        out.append(complete_bell(n, b[1:], a[1:]))
    return HurwitzSeries(out, f.ring)
