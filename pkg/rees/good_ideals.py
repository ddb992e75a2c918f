"""Stability and goodness of an ideal with respect to a candidate reduction.

``I`` is stable when ``I^2 = QI`` and good when in addition ``Q : I = I``. The
reduction ``Q`` is supplied by the caller (in practice a pure-power ideal); no
search over minimal reductions is attempted.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .canonical import UlrichNumbers
from .classification import ClassLabel
from .errors import PreconditionError
from .monomials import Monomial, MonomialIdeal, colon, contains, equals, power, product

logger = logging.getLogger(__name__)


def _witness(candidates: MonomialIdeal, outside: MonomialIdeal) -> Monomial | None:
    """A generator of ``candidates`` not in ``outside``.

    Picks the one with the widest support, then the lexicographically largest,
    so the choice is deterministic and as far from a pure power as possible.
    """
    missing = [g for g in candidates.gens if g not in outside]
    if not missing:
        return None
    return max(missing, key=lambda g: (g.support, g.exponents))


def _require_reduction(ideal: MonomialIdeal, reduction: MonomialIdeal) -> None:
    if ideal.dim != reduction.dim:
        raise PreconditionError(
            f"Ideal and reduction live in dimensions {ideal.dim} and {reduction.dim}."
        )
    if not contains(ideal, reduction):
        raise PreconditionError("The reduction Q must be contained in I.")


@dataclass(frozen=True)
class StabilityCheck:
    stable: bool
    # A generator of I^2 outside QI, when I is not stable.
    witness: Monomial | None = None

    def __bool__(self):
        return self.stable


def is_stable(ideal: MonomialIdeal, reduction: MonomialIdeal) -> StabilityCheck:
    """Whether ``I^2 = QI``; on failure, carries a generator of ``I^2`` outside ``QI``."""
    _require_reduction(ideal, reduction)
    square = power(ideal, 2)
    reduced = product(reduction, ideal)
    witness = _witness(square, reduced)
    return StabilityCheck(stable=witness is None, witness=witness)


@dataclass(frozen=True)
class GoodIdealReport:
    """Outcome of the stability and colon tests for one pair ``(I, Q)``.

    A parameter ideal is never good: ``Q : Q`` is the unit ideal, so the colon
    test fails on its own and ``I != Q`` needs no separate check.
    """

    ideal: MonomialIdeal
    reduction: MonomialIdeal
    stable: bool
    colon_closed: bool
    colon_result: MonomialIdeal
    witness: Monomial | None

    @property
    def good(self) -> bool:
        return self.stable and self.colon_closed


def good_report(ideal: MonomialIdeal, reduction: MonomialIdeal) -> GoodIdealReport:
    stability = is_stable(ideal, reduction)
    colon_result = colon(reduction, ideal)
    colon_closed = equals(colon_result, ideal)
    witness = stability.witness
    if witness is None and not colon_closed:
        # A stable ideal satisfies I <= Q : I, so the colon is strictly larger.
        witness = _witness(colon_result, ideal)
    logger.debug(
        "Good-ideal test for %s over %s: stable=%s colon_closed=%s",
        ideal,
        reduction,
        stability.stable,
        colon_closed,
    )
    return GoodIdealReport(
        ideal=ideal,
        reduction=reduction,
        stable=stability.stable,
        colon_closed=colon_closed,
        colon_result=colon_result,
        witness=witness,
    )


@dataclass(frozen=True)
class HighGoodProfile:
    """Counts for the Rees algebra of a good ideal in a regular ambient, d >= 3.

    The canonical module is ``Rt + Rt^2 + ... + Rt^(d-2)``.
    """

    d: int
    mu_K: int
    label: ClassLabel
    ulrich: UlrichNumbers


def high_good_profile(d: int) -> HighGoodProfile:
    if d < 3:
        raise PreconditionError(f"The good-ideal profile needs d >= 3, got {d}.")
    c = d - 3
    label = (
        ClassLabel.GORENSTEIN_GRADED if d == 3 else ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY
    )
    return HighGoodProfile(
        d=d, mu_K=d - 2, label=label, ulrich=UlrichNumbers(c=c, mu_C=c, e_C=c)
    )


@dataclass(frozen=True)
class GradedObstruction:
    mu_C: int
    e_C_lower: int

    @property
    def contradicts_ulrich(self) -> bool:
        return self.e_C_lower > self.mu_C


def high_good_graded_obstruction(d: int) -> GradedObstruction:
    """Why a good ideal with d >= 4 never gives an almost Gorenstein graded Rees algebra.

    A graded Ulrich cokernel would have ``mu(C) = mu(K) - 1 = d - 3`` while
    ``C`` contains ``R / I^(d-2) R``, whose multiplicity is at least the
    length ``d - 2`` of the chain ``I^(d-2) R_P < ... < I R_P < R_P``.
    """
    if d < 4:
        raise PreconditionError(f"The graded obstruction needs d >= 4, got {d}.")
    return GradedObstruction(mu_C=d - 3, e_C_lower=d - 2)


def high_good_embedding_test(d: int, embedding_dim: int) -> bool:
    """The generator-count inequality an almost Gorenstein local Rees ring imposes.

    With ``v = mu(m)``: ``(d-2) v + mu(I) <= v + mu(I) + d (d-3)``, which
    holds exactly when ``v <= d``, i.e. only for a regular ambient.
    """
    if d < 4:
        raise PreconditionError(f"The embedding-dimension test needs d >= 4, got {d}.")
    if embedding_dim < d:
        raise PreconditionError(
            f"Embedding dimension {embedding_dim} is below the dimension {d}."
        )
    return (d - 2) * embedding_dim <= embedding_dim + d * (d - 3)
