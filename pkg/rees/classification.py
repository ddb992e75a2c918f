"""Which Rees algebras ``R(m^ell)`` of a regular local ring are almost Gorenstein.

:func:`classify` assigns a label to one ``(d, ell)`` and records the numbers
that justify it; :func:`table` evaluates a whole grid, d-major.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from django.conf import settings
from django.db import models

from .canonical import (
    Obstruction,
    UlrichNumbers,
    agl_inequality,
    associated_graded_gorenstein,
    ladder,
    mu_K,
    notgraded_obstruction,
    ulrich_numbers,
)
from .combinatorics import ExactInt, ineq_sides
from .errors import InvariantBreach, PreconditionError

logger = logging.getLogger(__name__)


class ClassLabel(models.TextChoices):
    """Strongest property that holds; compared by strength, not alphabetically."""

    GORENSTEIN_GRADED = "Gor", "Gorenstein"
    ALMOST_GORENSTEIN_GRADED = "AG", "almost Gorenstein graded"
    ALMOST_GORENSTEIN_LOCAL_ONLY = "AGL", "almost Gorenstein local only"
    NONE = "X", "none"

    @property
    def strength(self) -> int:
        return _STRENGTH[self]

    def __lt__(self, other):
        if not isinstance(other, ClassLabel):
            return NotImplemented
        return self.strength < other.strength

    def __le__(self, other):
        if not isinstance(other, ClassLabel):
            return NotImplemented
        return self.strength <= other.strength

    def __gt__(self, other):
        if not isinstance(other, ClassLabel):
            return NotImplemented
        return self.strength > other.strength

    def __ge__(self, other):
        if not isinstance(other, ClassLabel):
            return NotImplemented
        return self.strength >= other.strength


_STRENGTH = {
    ClassLabel.NONE: 0,
    ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY: 1,
    ClassLabel.ALMOST_GORENSTEIN_GRADED: 2,
    ClassLabel.GORENSTEIN_GRADED: 3,
}


class RuleFired(models.TextChoices):
    PARAMETER_IDEAL = "parameter-ideal", "ell = 1: m is a parameter ideal"
    DIMENSION_TWO = "dimension-two", "d = 2"
    GORENSTEIN_DIAGONAL = "gorenstein-diagonal", "ell = d - 1"
    DIVISOR_AGL = "divisor-agl", "ell | d - 1 with graded obstruction"
    GAP_POSITIVE = "gap-positive", "positive binomial gap"


RULE_LABELS = {
    RuleFired.PARAMETER_IDEAL: ClassLabel.ALMOST_GORENSTEIN_GRADED,
    RuleFired.DIMENSION_TWO: ClassLabel.ALMOST_GORENSTEIN_GRADED,
    RuleFired.GORENSTEIN_DIAGONAL: ClassLabel.GORENSTEIN_GRADED,
    RuleFired.DIVISOR_AGL: ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY,
    RuleFired.GAP_POSITIVE: ClassLabel.NONE,
}

_CITATIONS = {
    RuleFired.PARAMETER_IDEAL: (
        "The maximal ideal of a regular local ring is a parameter ideal, and the Rees "
        "algebra of a parameter ideal is almost Gorenstein graded."
    ),
    RuleFired.DIMENSION_TWO: (
        "In dimension two every power of m is a stable ideal with J = Q : I = m^(ell-1); "
        "the (f, g, h) certificate gives an Ulrich cokernel for every ell."
    ),
    RuleFired.GORENSTEIN_DIAGONAL: (
        "R(m^(d-1)) is Gorenstein (canonical module R t); for d = 2, ell = 1 this is "
        "A[X,Y]/(aY - bX), the Rees algebra of a parameter ideal."
    ),
    RuleFired.DIVISOR_AGL: (
        "ell | d-1 makes K = Rt + ... + Rt^(b+1), so the cokernel A^b is Ulrich locally; "
        "a graded cokernel would need e(C) >= ell^d > b+1 >= mu(C)."
    ),
    RuleFired.GAP_POSITIVE: (
        "The binomial gap is positive, so mu(mJ) + mu(m^ell J) <= mu(m^ell) + d mu(J) fails "
        "and the localization at M is not almost Gorenstein."
    ),
}


@dataclass(frozen=True)
class Evidence:
    """Numbers behind one label. Always recomputed, never read back from a table."""

    d: int
    ell: int
    b: int
    mu_K: ExactInt
    gap: ExactInt | None
    rule_fired: RuleFired
    obstruction: Obstruction | None = None
    ulrich: UlrichNumbers | None = None
    associated_graded_gorenstein: bool = False

    @property
    def citation(self) -> str:
        return _CITATIONS[self.rule_fired]


def _rule_for(d: int, ell: int) -> RuleFired:
    if ell == d - 1:
        return RuleFired.GORENSTEIN_DIAGONAL
    if d == 2:
        return RuleFired.DIMENSION_TWO
    if ell == 1:
        return RuleFired.PARAMETER_IDEAL
    if (d - 1) % ell == 0:
        return RuleFired.DIVISOR_AGL
    return RuleFired.GAP_POSITIVE


def classify(d: int, ell: int) -> tuple[ClassLabel, Evidence]:
    if d < 2 or ell < 1:
        raise PreconditionError(f"classify needs d >= 2 and ell >= 1, got d={d}, ell={ell}.")
    steps = ladder(d, ell)
    rule = _rule_for(d, ell)
    higher = d >= 3 and ell >= 2
    evidence = Evidence(
        d=d,
        ell=ell,
        b=steps.b,
        mu_K=steps.mu_K,
        gap=ineq_sides(d, ell).gap if higher else None,
        rule_fired=rule,
        obstruction=notgraded_obstruction(d, ell) if rule == RuleFired.DIVISOR_AGL else None,
        ulrich=ulrich_numbers(d, ell) if d >= 3 and steps.unit_tail else None,
        associated_graded_gorenstein=associated_graded_gorenstein(d, ell),
    )
    return RULE_LABELS[rule], evidence


def cross_check(d: int, ell: int) -> bool:
    """Tie the label to the ladder counts: gap, mu(K) and the obstruction."""
    if d < 3 or ell < 2:
        raise PreconditionError(f"cross_check needs d >= 3 and ell >= 2, got d={d}, ell={ell}.")
    label, _evidence = classify(d, ell)
    gap_zero = ineq_sides(d, ell).gap == 0
    local = label in (ClassLabel.GORENSTEIN_GRADED, ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY)
    checks = [
        local == gap_zero,
        agl_inequality(d, ell) == gap_zero,
        (label == ClassLabel.GORENSTEIN_GRADED) == (mu_K(d, ell) == 1),
    ]
    if label == ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY:
        try:
            notgraded_obstruction(d, ell)
        except (PreconditionError, InvariantBreach):
            checks.append(False)
    ok = all(checks)
    if not ok:
        logger.warning("Cross-check failed at d=%s, ell=%s (label %s)", d, ell, label)
    return ok


@dataclass(frozen=True)
class Cell:
    d: int
    ell: int
    label: ClassLabel
    evidence: Evidence


@dataclass(frozen=True)
class ClassificationTable:
    d_max: int
    ell_max: int
    # d-major, then ell.
    cells: list[Cell]

    def rows(self) -> list[list[Cell]]:
        return [self.cells[i : i + self.ell_max] for i in range(0, len(self.cells), self.ell_max)]

    def label_at(self, d: int, ell: int) -> ClassLabel:
        return self.cells[(d - 2) * self.ell_max + (ell - 1)].label


def _cell(key: tuple[int, int]) -> Cell:
    d, ell = key
    label, evidence = classify(d, ell)
    return Cell(d=d, ell=ell, label=label, evidence=evidence)


def table(d_max: int, ell_max: int, *, workers: int | None = None) -> ClassificationTable:
    """Every cell with ``2 <= d <= d_max`` and ``1 <= ell <= ell_max``."""
    if d_max < 2 or ell_max < 1:
        raise PreconditionError(
            f"The table needs d_max >= 2 and ell_max >= 1, got {d_max}, {ell_max}."
        )
    workers = workers or settings.REES_TABLE_WORKERS
    keys = [(d, ell) for d in range(2, d_max + 1) for ell in range(1, ell_max + 1)]
    logger.debug("Classifying %d cells with %d worker(s)", len(keys), workers)
    if workers > 1:
        # map() yields in submission order, so the grid stays d-major.
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_cell, keys))
    else:
        cells = [_cell(key) for key in keys]
    return ClassificationTable(d_max=d_max, ell_max=ell_max, cells=cells)
