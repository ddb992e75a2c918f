"""Exact binomial arithmetic and the closed-form counts for powers of ``m``.

All values are Python integers, so nothing is ever rounded. The functions are
pure and safe to call from any number of threads.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InvariantBreach, PreconditionError

logger = logging.getLogger(__name__)

# Arbitrary precision is what Python integers already give us; the alias keeps
# signatures honest about which quantities must never pass through a float.
ExactInt = int


def binom(n: int, m: int) -> ExactInt:
    """Binomial coefficient, zero outside ``0 <= m <= n``.

    Multiplicative formula; every intermediate division is exact because the
    running product is itself a binomial coefficient.
    """
    if n < 0:
        raise PreconditionError(f"binom needs n >= 0, got {n}.")
    if m < 0 or m > n:
        return 0
    m = min(m, n - m)
    result = 1
    for k in range(1, m + 1):
        result = result * (n - m + k) // k
    return result


def mu_power(d: int, k: int) -> ExactInt:
    """Minimal number of generators of ``m^k`` in ``d`` variables."""
    return binom(k + d - 1, d - 1)


def colength_power(d: int, k: int) -> ExactInt:
    """Number of monomials of total degree below ``k`` in ``d`` variables."""
    return binom(k + d - 1, d)


def b_of(d: int, ell: int) -> int:
    """The index ``b`` of the canonical ladder: ``floor((d-2)/ell)``."""
    if d < 2 or ell < 1:
        raise PreconditionError(f"b is defined for d >= 2 and ell >= 1, got d={d}, ell={ell}.")
    b = (d - 2) // ell
    ceiling_form = -(-(d - 1) // ell) - 1
    if b != ceiling_form:
        raise InvariantBreach(f"floor and ceiling forms of b disagree at d={d}, ell={ell}.")
    return b


def _require_inequality_range(d: int, ell: int) -> None:
    if d < 3 or ell < 2:
        raise PreconditionError(
            f"The binomial inequality needs d >= 3 and ell >= 2, got d={d}, ell={ell}."
        )


@dataclass(frozen=True)
class IneqSides:
    """Both sides of the binomial inequality behind the divisor criterion."""

    d: int
    ell: int
    b: int
    i: int
    lhs: ExactInt
    rhs: ExactInt

    @property
    def gap(self) -> ExactInt:
        return self.lhs - self.rhs

    @property
    def divisor_case(self) -> bool:
        return (self.d - 1) % self.ell == 0


def ineq_sides(d: int, ell: int) -> IneqSides:
    """Evaluate both sides directly from binomials.

    lhs = C((b+1)l+1, d-1) + C((b+2)l, d-1)
    rhs = C(l+d-1, d-1) + d * C((b+1)l, d-1)
    """
    _require_inequality_range(d, ell)
    b = b_of(d, ell)
    lhs = binom((b + 1) * ell + 1, d - 1) + binom((b + 2) * ell, d - 1)
    rhs = binom(ell + d - 1, d - 1) + d * binom((b + 1) * ell, d - 1)
    return IneqSides(d=d, ell=ell, b=b, i=d - 2 - b * ell, lhs=lhs, rhs=rhs)


def ineq_gap_telescoped(d: int, ell: int) -> ExactInt:
    """The same gap, as the telescoped Pascal sum over ``i < j < ell``.

    Every summand is non-negative, and the sum is empty exactly when
    ``i = ell - 1``, that is when ``ell`` divides ``d - 1``.
    """
    _require_inequality_range(d, ell)
    b = b_of(d, ell)
    i = d - 2 - b * ell
    base = (b + 1) * ell
    return sum(
        (binom(base + j, d - 2) - binom(base, d - 2) for j in range(i + 1, ell)),
        start=0,
    )


class Counterexample(NamedTuple):
    d: int
    ell: int
    reason: str


@dataclass(frozen=True)
class SweepReport:
    d_max: int
    ell_max: int
    gaps: list[IneqSides] = field(default_factory=list)
    # First cell that breaks the expected pattern.
    counterexample: Counterexample | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def lemma_sweep(d_max: int, ell_max: int) -> SweepReport:
    """Check gap >= 0, gap = 0 iff ell | d-1, and telescoped = direct, d-major."""
    _require_inequality_range(d_max, ell_max)
    logger.debug("Inequality sweep over d <= %s, ell <= %s", d_max, ell_max)
    gaps: list[IneqSides] = []
    counterexample = None
    for d in range(3, d_max + 1):
        for ell in range(2, ell_max + 1):
            sides = ineq_sides(d, ell)
            gaps.append(sides)
            if counterexample is not None:
                continue
            reason = None
            if sides.gap < 0:
                reason = f"negative gap {sides.gap}"
            elif (sides.gap == 0) != sides.divisor_case:
                reason = f"gap {sides.gap} but divisor case is {sides.divisor_case}"
            elif ineq_gap_telescoped(d, ell) != sides.gap:
                reason = "telescoped sum differs from the direct difference"
            if reason is not None:
                logger.warning("Inequality counterexample at d=%s, ell=%s: %s", d, ell, reason)
                counterexample = Counterexample(d, ell, reason)
    return SweepReport(d_max=d_max, ell_max=ell_max, gaps=gaps, counterexample=counterexample)
