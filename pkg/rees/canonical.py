"""The graded canonical module of ``R(m^ell)`` over a regular ambient, and its counts.

In degree ``n`` the canonical module is ``A`` for ``1 <= n <= b`` and
``m^(n*ell - d + 1)`` from ``n = b + 1`` on, with ``b = floor((d-2)/ell)``.
The ladder is kept in closed form (``b`` and the tail exponent); every
generator count downstream needs nothing else.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .combinatorics import ExactInt, b_of, ineq_sides, mu_power
from .errors import InvariantBreach, PreconditionError
from .monomials import (
    MonomialIdeal,
    colon,
    equals,
    maximal_power,
    product,
    pure_powers,
)

logger = logging.getLogger(__name__)

# Stable ideals give Rees algebras with a-invariant -1; carried, not computed.
A_INVARIANT = -1

# e(m) of a regular local ring.
REGULAR_MULTIPLICITY = 1


@dataclass(frozen=True)
class CanonicalLadder:
    d: int
    ell: int
    b: int
    tail_exponent: int
    a_invariant: int = A_INVARIANT

    def exponent_at(self, n: int) -> int:
        """``e`` with ``[K]_n = m^e``; ``0`` means the unit ideal."""
        if n < 1:
            raise PreconditionError(f"The canonical module starts in degree 1, got {n}.")
        if n <= self.b:
            return 0
        return n * self.ell - self.d + 1

    def materialize(self, n_max: int) -> list[MonomialIdeal]:
        """Components in degrees ``1 .. n_max`` as monomial ideals."""
        return [maximal_power(self.d, self.exponent_at(n)) for n in range(1, n_max + 1)]

    @property
    def unit_tail(self) -> bool:
        return self.tail_exponent == 0

    @property
    def mu_K(self) -> ExactInt:
        """Generated by ``t, ..., t^b`` and ``J t^(b+1)`` with ``J = m^tail``."""
        return self.b + mu_power(self.d, self.tail_exponent)

    @property
    def mu_MK(self) -> ExactInt:
        """Generated by ``m t, ..., m t^b``, ``m J t^(b+1)`` and ``m^ell J t^(b+2)``."""
        return (
            self.b * self.d
            + mu_power(self.d, self.tail_exponent + 1)
            + mu_power(self.d, self.tail_exponent + self.ell)
        )


def ladder(d: int, ell: int) -> CanonicalLadder:
    if d < 2 or ell < 1:
        raise PreconditionError(f"The ladder needs d >= 2 and ell >= 1, got d={d}, ell={ell}.")
    b = b_of(d, ell)
    tail = (b + 1) * ell - d + 1
    if tail < 0 or (tail == 0) != ((d - 1) % ell == 0):
        raise InvariantBreach(f"Tail exponent {tail} is inconsistent at d={d}, ell={ell}.")
    return CanonicalLadder(d=d, ell=ell, b=b, tail_exponent=tail)


def _require_higher(d: int, ell: int) -> None:
    if d < 3 or ell < 2:
        raise PreconditionError(f"Needs d >= 3 and ell >= 2, got d={d}, ell={ell}.")


def mu_K(d: int, ell: int) -> ExactInt:
    """``mu(K) = b + mu(J)``."""
    _require_higher(d, ell)
    return ladder(d, ell).mu_K


def mu_MK(d: int, ell: int) -> ExactInt:
    """``mu(MK) = b * mu(m) + mu(mJ) + mu(m^ell J)``."""
    _require_higher(d, ell)
    return ladder(d, ell).mu_MK


def graded_maximal_generators(d: int, ell: int) -> ExactInt:
    """``mu(M) = mu(m) + mu(m^ell)`` for ``M = mR + R_+``."""
    return mu_power(d, 1) + mu_power(d, ell)


def agl_inequality(d: int, ell: int) -> bool:
    """``mu(mJ) + mu(m^ell J) <= mu(m^ell) + d * mu(J)``.

    Necessary for the local ring at M to be almost Gorenstein; combined with
    the opposite binomial inequality it holds exactly when ``ell`` divides ``d - 1``.
    """
    _require_higher(d, ell)
    tail = ladder(d, ell).tail_exponent
    holds = mu_power(d, tail + 1) + mu_power(d, tail + ell) <= mu_power(d, ell) + d * mu_power(
        d, tail
    )
    if holds != (ineq_sides(d, ell).gap == 0):
        raise InvariantBreach(
            f"Generator inequality and binomial gap disagree at d={d}, ell={ell}."
        )
    return holds


def associated_graded_gorenstein(d: int, ell: int) -> bool:
    """``G(m^ell)`` over a regular ambient is Gorenstein exactly when ``ell | d - 1``."""
    return (d - 1) % ell == 0


@dataclass(frozen=True)
class UlrichNumbers:
    """``C = K / R t^(c+1)`` is ``A^c`` as an A-module, so ``mu(C) = e(C) = c``."""

    c: int
    mu_C: ExactInt
    e_C: ExactInt

    @property
    def is_ulrich(self) -> bool:
        return self.mu_C == self.e_C


def ulrich_numbers(d: int, ell: int) -> UlrichNumbers:
    """Ulrich counts for a ladder with unit tail, ``K = Rt + ... + Rt^(c+1)``."""
    if d < 2 or ell < 1:
        raise PreconditionError(f"Needs d >= 2 and ell >= 1, got d={d}, ell={ell}.")
    if (d - 1) % ell:
        raise PreconditionError(
            f"ell={ell} does not divide d-1={d - 1}: the ladder tail is not the unit ideal."
        )
    steps = ladder(d, ell)
    c = (d - 1) // ell - 1
    mu_C = steps.mu_K - 1
    e_C = REGULAR_MULTIPLICITY * c
    if mu_C != c:
        raise InvariantBreach(f"mu(C)={mu_C} differs from c={c} at d={d}, ell={ell}.")
    return UlrichNumbers(c=c, mu_C=mu_C, e_C=e_C)


@dataclass(frozen=True)
class Obstruction:
    """Bounds showing a graded Ulrich cokernel cannot exist."""

    mu_bound: ExactInt
    e_bound: ExactInt


def notgraded_obstruction(d: int, ell: int) -> Obstruction:
    """``mu(C) <= b`` against ``e(C) >= e(m^ell) = ell^d`` when ``ell | d-1``, ``ell != d-1``."""
    if ell < 2 or d < 3 or (d - 1) % ell or ell == d - 1:
        raise PreconditionError(
            f"The obstruction needs ell >= 2, d >= 3, ell | d-1 and ell != d-1; "
            f"got d={d}, ell={ell}."
        )
    b = b_of(d, ell)
    e_bound = ell**d * REGULAR_MULTIPLICITY
    if not e_bound > b + 1:
        raise InvariantBreach(f"ell^d={e_bound} does not exceed b+1={b + 1} at d={d}, ell={ell}.")
    return Obstruction(mu_bound=b, e_bound=e_bound)


def ladder_cross_check(d: int, ell: int, n_max: int) -> bool:
    """Compare the ladder with ``(m^ell)^(n-1) J``, ``J = (x^ell, y^ell) : m^ell``.

    Only in dimension two, where ``K_R(1) = JR`` and ``J`` is a monomial colon.
    """
    if d != 2:
        raise PreconditionError(f"The ladder cross-check runs in dimension 2 only, got d={d}.")
    if ell < 2:
        raise PreconditionError(f"The ladder cross-check needs ell >= 2, got {ell}.")
    steps = ladder(d, ell)
    ideal = maximal_power(2, ell)
    j = colon(pure_powers(2, ell), ideal)
    graded_piece: MonomialIdeal = j
    for n in range(1, n_max + 1):
        expected = maximal_power(2, steps.exponent_at(n))
        if not equals(expected, graded_piece):
            logger.warning("Ladder and colon disagree in degree %s for ell=%s", n, ell)
            return False
        graded_piece = product(graded_piece, ideal)
    return True


@dataclass(frozen=True)
class LadderReport:
    ladder: CanonicalLadder
    mu_K: ExactInt
    mu_MK: ExactInt
    gap: ExactInt | None
    obstruction: Obstruction | None
    components: list[MonomialIdeal] | None = None


def ladder_report(d: int, ell: int, n_max: int = 0) -> LadderReport:
    """Everything the ladder determines, with the gap and obstruction inside their hypotheses."""
    steps = ladder(d, ell)
    higher = d >= 3 and ell >= 2
    obstruction = None
    if higher and (d - 1) % ell == 0 and ell != d - 1:
        obstruction = notgraded_obstruction(d, ell)
    return LadderReport(
        ladder=steps,
        mu_K=steps.mu_K,
        mu_MK=steps.mu_MK,
        gap=ineq_sides(d, ell).gap if higher else None,
        obstruction=obstruction,
        components=steps.materialize(n_max) if n_max else None,
    )
