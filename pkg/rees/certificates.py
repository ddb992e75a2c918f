"""Explicit witnesses that a Rees algebra is almost Gorenstein graded.

In each case the witness is a triple ``(f, g, h)`` for which two finite
module identities hold; together they give ``M * K <= (f, gt) K + R h`` and
hence an Ulrich cokernel. Two families are covered:

* powers ``m^ell`` in the two-dimensional polynomial ring, with
  ``J = (x^ell, y^ell) : m^ell``;
* powers of the maximal ideal of the Veronese subring, a rational
  singularity of minimal multiplicity whose canonical ideal is monomial.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import InvariantBreach, PreconditionError
from .monomials import (
    Monomial,
    MonomialIdeal,
    colon,
    contains,
    equals,
    ideal_sum,
    maximal_power,
    principal,
    product,
    pure_powers,
)
from .semigroups import Pair, SemigroupModule, element_power

logger = logging.getLogger(__name__)


# --------------------------------------------------------------------------
# Dimension two
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate2D:
    """``f = x``, ``g = x^ell``, ``h = y^(ell-1)`` with ``mJ = fJ + mh`` and ``IJ = gJ + Ih``."""

    ell: int
    f: Monomial
    g: Monomial
    h: Monomial
    J: MonomialIdeal
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def maximal(self) -> MonomialIdeal:
        return maximal_power(2, 1)

    @property
    def ideal(self) -> MonomialIdeal:
        return maximal_power(2, self.ell)

    @property
    def valid(self) -> bool:
        return bool(self.checks) and all(self.checks.values())


def build_certificate_2dim(ell: int) -> Certificate2D:
    if ell < 2:
        raise PreconditionError(
            f"ell={ell}: parameter ideal; the certificate needs a stable non-parameter ideal."
        )
    m = maximal_power(2, 1)
    ideal = maximal_power(2, ell)
    j = colon(pure_powers(2, ell), ideal)
    f = Monomial((1, 0))
    g = Monomial((ell, 0))
    h = Monomial((0, ell - 1))
    checks = {
        "A": equals(product(m, j), ideal_sum(product(principal(f), j), product(m, principal(h)))),
        "B": equals(
            product(ideal, j), ideal_sum(product(principal(g), j), product(ideal, principal(h)))
        ),
    }
    if not all(checks.values()):
        raise InvariantBreach(f"Certificate identities fail for ell={ell}: {checks}")
    return Certificate2D(ell=ell, f=f, g=g, h=h, J=j, checks=checks)


def claim_containment_by_degree(cert: Certificate2D, n_max: int) -> list[bool]:
    """Degree-n pieces of ``M * JR <= (f, gt) JR + Rh`` for ``n = 0 .. n_max``.

    Degree 0 is ``mJ <= fJ + mh``; degree 1 is ``IJ <= gJ + Ih``; from degree 2
    on it is ``I^n J <= g I^(n-1) J + I^n h``.

    The target is the sum ``(f, gt) JR + Rh``. A printed form
    ``(f, gt) JR + <= Rh`` carries a stray containment sign and is read as that sum.
    """
    m = cert.maximal
    ideal = cert.ideal
    j = cert.J
    degree_zero = ideal_sum(product(principal(cert.f), j), product(m, principal(cert.h)))
    outcomes = [contains(degree_zero, product(m, j))]
    lower = j  # I^(n-1) J
    power_h = principal(cert.h)  # I^(n-1) h
    for n in range(1, n_max + 1):
        upper = product(ideal, lower)
        power_h = product(ideal, power_h)
        outcomes.append(contains(ideal_sum(product(principal(cert.g), lower), power_h), upper))
        lower = upper
    return outcomes


def verify_claim_containment(cert: Certificate2D, n_max: int) -> bool:
    outcomes = claim_containment_by_degree(cert, n_max)
    for degree, ok in enumerate(outcomes):
        if not ok:
            logger.warning("Claim containment fails in degree %s for ell=%s", degree, cert.ell)
    return all(outcomes)


@dataclass(frozen=True)
class CertificateCheck:
    certificate: Certificate2D
    n_max: int
    claim_by_degree: list[bool]

    @property
    def claim_holds(self) -> bool:
        return all(self.claim_by_degree)

    @property
    def degrees_checked(self) -> list[int]:
        return list(range(self.n_max + 1))


def check_certificate(ell: int, n_max: int) -> CertificateCheck:
    if n_max < 0:
        raise PreconditionError(f"n_max must be non-negative, got {n_max}.")
    cert = build_certificate_2dim(ell)
    return CertificateCheck(
        certificate=cert, n_max=n_max, claim_by_degree=claim_containment_by_degree(cert, n_max)
    )


# --------------------------------------------------------------------------
# Veronese subring
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class VeroneseInstance:
    """The degree-r Veronese ring with its canonical ideal and the elements x, y, z."""

    r: int
    # The ring as a module over itself.
    A_gens: frozenset[Pair]
    m_gens: frozenset[Pair]
    K_gens: frozenset[Pair]
    x: Pair
    y: Pair
    z: Pair

    def in_ambient(self, p: Pair) -> bool:
        return p[0] >= 0 and p[1] >= 0 and (p[0] + p[1]) % self.r == 0

    @property
    def maximal(self) -> SemigroupModule:
        return SemigroupModule(self.r, self.m_gens)

    @property
    def canonical(self) -> SemigroupModule:
        return SemigroupModule(self.r, self.K_gens)


def veronese_instance(r: int) -> VeroneseInstance:
    if r < 2:
        raise PreconditionError(
            f"r={r}: the ring is regular and m is a parameter ideal, not a good non-parameter one."
        )
    return VeroneseInstance(
        r=r,
        A_gens=frozenset({(0, 0)}),
        m_gens=frozenset((a, r - a) for a in range(r + 1)),
        K_gens=frozenset((r - i, i) for i in range(1, r)),
        x=(1, r - 1),
        y=(r, 0),
        z=(0, r),
    )


def verify_minimal_multiplicity(inst: VeroneseInstance) -> bool:
    """``m^2 = (y, z) m``."""
    m = inst.maximal
    return (m * m).equals(m.shift(inst.y) + m.shift(inst.z))


def good_agg_checks(inst: VeroneseInstance, ell: int) -> dict[str, bool]:
    """Every identity of the non-Gorenstein branch, reported separately.

    ``example_form`` is the variant ``mK = y mK + x m`` with the extra factor of
    ``m``; it holds only for ``r = 2`` and is not part of the verdict.
    """
    if ell < 1:
        raise PreconditionError(f"ell must be at least 1, got {ell}.")
    m = inst.maximal
    k = inst.canonical
    ambient = SemigroupModule(inst.r, inst.A_gens)
    mk = m * k
    m_ell = m.power(ell)
    m_ell_k = m_ell * k
    h = (inst.x[0] + ell * inst.z[0], inst.x[1] + ell * inst.z[1])
    h_module = ambient.shift(h)
    return {
        "precondition": mk.equals(k.shift(inst.y) + m.shift(inst.x)),
        "example_form": mk.equals(mk.shift(inst.y) + m.shift(inst.x)),
        "x_not_in_mK": inst.x not in mk,
        "h_in_mlK": h in m_ell_k,
        "identity_f": (m_ell * mk).equals(m_ell_k.shift(inst.y) + m * h_module),
        "identity_g": (m.power(2 * ell) * k).equals(
            m_ell_k.shift(element_power(inst.y, ell)) + m_ell * h_module
        ),
    }


def verify_good_agg_claim(inst: VeroneseInstance, ell: int) -> bool:
    """``m^(l+1) K = f m^l K + m h`` and ``m^(2l) K = g m^l K + m^l h`` for
    ``f = y``, ``g = y^l``, ``h = x z^l``, together with ``mK = yK + xm``."""
    checks = good_agg_checks(inst, ell)
    return all(
        checks[name] for name in ("precondition", "h_in_mlK", "identity_f", "identity_g")
    )


def verify_gorenstein_branch(r: int, ell: int) -> bool:
    """The ``K = A`` branch: ``m^(l+1) = y m^l + m z^l`` and ``m^(2l) = y^l m^l + m^l z^l``.

    ``r = 1`` is the two-dimensional regular ring; ``r = 2`` is Gorenstein.
    """
    if r < 1 or ell < 1:
        raise PreconditionError(f"Needs r >= 1 and ell >= 1, got r={r}, ell={ell}.")
    m = SemigroupModule.generated_by(r, ((a, r - a) for a in range(r + 1)))
    y, z = (r, 0), (0, r)
    m_ell = m.power(ell)
    first = m.power(ell + 1).equals(m_ell.shift(y) + m.shift(element_power(z, ell)))
    second = m.power(2 * ell).equals(
        m_ell.shift(element_power(y, ell)) + m_ell.shift(element_power(z, ell))
    )
    return first and second


@dataclass(frozen=True)
class VeroneseReport:
    r: int
    ell: int
    minimal_multiplicity: bool
    checks: dict[str, bool]
    gorenstein_branch: bool
    f: Pair
    g: Pair
    h: Pair

    # identity_f and identity_g are the degree 0 and degree 1 pieces of the claim.
    degrees_checked: tuple[int, ...] = (0, 1)

    @property
    def identities(self) -> dict[str, bool]:
        return {"A": self.checks["identity_f"], "B": self.checks["identity_g"]}

    @property
    def claim_holds(self) -> bool:
        return self.minimal_multiplicity and all(
            self.checks[name] for name in ("precondition", "h_in_mlK", "identity_f", "identity_g")
        )


def veronese_report(r: int, ell: int) -> VeroneseReport:
    inst = veronese_instance(r)
    return VeroneseReport(
        r=r,
        ell=ell,
        minimal_multiplicity=verify_minimal_multiplicity(inst),
        checks=good_agg_checks(inst, ell),
        gorenstein_branch=verify_gorenstein_branch(r, ell),
        f=inst.y,
        g=element_power(inst.y, ell),
        h=(inst.x[0] + ell * inst.z[0], inst.x[1] + ell * inst.z[1]),
    )


# --------------------------------------------------------------------------
# Multiplicity two
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityTwoNote:
    hypothesis: str
    consequence: str
    gorenstein_note: str


def mult2_note() -> MultiplicityTwoNote:
    """Recorded fact, no computation: the case is covered by the Gorenstein branch."""
    return MultiplicityTwoNote(
        hypothesis="(A, m) is a Cohen-Macaulay local ring with e(m) = 2.",
        consequence=(
            "A has minimal multiplicity and is Gorenstein, and R(m) is an almost "
            "Gorenstein graded ring."
        ),
        gorenstein_note="A is Gorenstein, that is, K = A.",
    )
