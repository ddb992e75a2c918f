import pytest

from rees.certificates import (
    build_certificate_2dim,
    check_certificate,
    claim_containment_by_degree,
    good_agg_checks,
    mult2_note,
    veronese_instance,
    veronese_report,
    verify_claim_containment,
    verify_good_agg_claim,
    verify_gorenstein_branch,
    verify_minimal_multiplicity,
)
from rees.errors import PreconditionError
from rees.monomials import equals, maximal_power
from rees.semigroups import SemigroupModule

# --------------------------------------------------------------------------
# Dimension two
# --------------------------------------------------------------------------


@pytest.mark.parametrize("ell", range(2, 21))
def test_certificate_identities(ell):
    cert = build_certificate_2dim(ell)
    assert cert.valid
    assert cert.checks == {"A": True, "B": True}
    assert equals(cert.J, maximal_power(2, ell - 1))


def test_certificate_elements():
    cert = build_certificate_2dim(2)
    assert (str(cert.f), str(cert.g), str(cert.h)) == ("x", "x^2", "y")
    cert = build_certificate_2dim(5)
    assert (str(cert.f), str(cert.g), str(cert.h)) == ("x", "x^5", "y^4")


def test_parameter_ideal_has_no_certificate():
    with pytest.raises(PreconditionError, match="parameter ideal"):
        build_certificate_2dim(1)


@pytest.mark.parametrize("ell", range(2, 11))
def test_claim_containment_through_degree_ten(ell):
    cert = build_certificate_2dim(ell)
    assert verify_claim_containment(cert, 10)
    assert len(claim_containment_by_degree(cert, 10)) == 11


@pytest.mark.parametrize("ell", range(2, 11))
def test_higher_degrees_follow_from_the_first_two(ell):
    outcomes = claim_containment_by_degree(build_certificate_2dim(ell), 10)
    assert outcomes[:2] == [True, True]
    # Degrees 0 and 1 force every later degree; a failure past them is a bug.
    assert outcomes[2:] == [True] * 9


def test_check_certificate():
    check = check_certificate(3, 4)
    assert check.claim_holds
    assert check.n_max == 4
    assert check.claim_by_degree == [True] * 5
    assert check.degrees_checked == [0, 1, 2, 3, 4]


def test_check_certificate_rejects_negative_degree():
    with pytest.raises(PreconditionError):
        check_certificate(3, -1)


# --------------------------------------------------------------------------
# Veronese subring
# --------------------------------------------------------------------------


def test_semigroup_membership():
    m = SemigroupModule.generated_by(3, [(3, 0), (2, 1), (1, 2), (0, 3)])
    assert (4, 2) in m
    assert (1, 1) not in m
    assert (0, 0) not in m
    ring = SemigroupModule.generated_by(3, [(0, 0)])
    assert (0, 0) in ring
    assert (2, 2) not in ring


def test_semigroup_equality_ignores_redundant_generators():
    m = SemigroupModule.generated_by(2, [(2, 0), (1, 1), (0, 2)])
    padded = m + SemigroupModule.generated_by(2, [(4, 0), (3, 1)])
    assert padded.equals(m)
    assert not m.equals(m * m)


def test_semigroup_modules_must_share_the_degree():
    with pytest.raises(PreconditionError):
        SemigroupModule.generated_by(2, [(0, 0)]) + SemigroupModule.generated_by(3, [(0, 0)])


def test_veronese_instance():
    inst = veronese_instance(3)
    assert inst.m_gens == frozenset({(3, 0), (2, 1), (1, 2), (0, 3)})
    assert inst.K_gens == frozenset({(2, 1), (1, 2)})
    assert (inst.x, inst.y, inst.z) == ((1, 2), (3, 0), (0, 3))
    assert inst.in_ambient((4, 2))
    assert not inst.in_ambient((4, 1))


def test_regular_ring_is_not_a_veronese_instance():
    with pytest.raises(PreconditionError):
        veronese_instance(1)


@pytest.mark.parametrize("r", range(2, 7))
@pytest.mark.parametrize("ell", range(1, 5))
def test_veronese_claim(r, ell):
    inst = veronese_instance(r)
    assert verify_minimal_multiplicity(inst)
    assert verify_good_agg_claim(inst, ell)
    checks = good_agg_checks(inst, ell)
    assert checks["x_not_in_mK"]
    assert checks["h_in_mlK"]


@pytest.mark.parametrize("r", range(2, 7))
def test_example_form_of_the_precondition_holds_only_for_r_two(r):
    checks = good_agg_checks(veronese_instance(r), 1)
    assert checks["precondition"]
    assert checks["example_form"] is (r == 2)


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("ell", range(1, 5))
def test_gorenstein_branch(r, ell):
    assert verify_gorenstein_branch(r, ell)


def test_veronese_report():
    report = veronese_report(2, 1)
    assert report.claim_holds
    assert report.gorenstein_branch
    assert (report.f, report.g, report.h) == ((2, 0), (2, 0), (1, 3))
    assert report.identities == {"A": True, "B": True}
    assert report.degrees_checked == (0, 1)


def test_multiplicity_two_note():
    note = mult2_note()
    assert "e(m) = 2" in note.hypothesis
    assert "K = A" in note.gorenstein_note
