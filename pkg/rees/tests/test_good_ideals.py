import pytest

from rees.classification import ClassLabel
from rees.errors import PreconditionError
from rees.good_ideals import (
    good_report,
    high_good_embedding_test,
    high_good_graded_obstruction,
    high_good_profile,
    is_stable,
)
from rees.monomials import colon, equals, maximal_power, pure_powers


def test_square_of_maximal_ideal_in_three_variables_is_good(m_squared_3):
    ideal, reduction = m_squared_3
    report = good_report(ideal, reduction)
    assert report.stable
    assert report.colon_closed
    assert report.good
    assert report.witness is None


@pytest.mark.parametrize("ell", range(2, 11))
def test_powers_in_dimension_two_are_stable_but_not_good(ell):
    report = good_report(maximal_power(2, ell), pure_powers(2, ell))
    assert report.stable
    assert not report.good
    assert equals(report.colon_result, maximal_power(2, ell - 1))
    # The witness lies in Q : I but not in I.
    assert report.witness in report.colon_result
    assert report.witness not in report.ideal


def test_cube_in_four_variables_is_not_stable():
    check = is_stable(maximal_power(4, 3), pure_powers(4, 3))
    assert not check
    assert check.witness.exponents == (2, 2, 1, 1)

    report = good_report(maximal_power(4, 3), pure_powers(4, 3))
    assert not report.stable
    assert not report.good
    assert report.witness == check.witness


def test_parameter_ideal_is_not_good():
    q = pure_powers(2, 2)
    report = good_report(q, q)
    assert report.stable
    assert not report.colon_closed
    assert report.colon_result.is_unit
    assert not report.good


def test_reduction_must_lie_in_the_ideal():
    with pytest.raises(PreconditionError, match="contained"):
        good_report(maximal_power(2, 3), pure_powers(2, 2))


def test_colon_agrees_with_report(m_squared_3):
    ideal, reduction = m_squared_3
    assert equals(good_report(ideal, reduction).colon_result, colon(reduction, ideal))


@pytest.mark.parametrize(
    ("d", "label", "c"),
    [
        (3, ClassLabel.GORENSTEIN_GRADED, 0),
        (4, ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY, 1),
        (7, ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY, 4),
    ],
)
def test_high_good_profile(d, label, c):
    profile = high_good_profile(d)
    assert profile.label == label
    assert profile.mu_K == d - 2
    assert profile.ulrich.c == c
    assert profile.ulrich.is_ulrich


def test_high_good_profile_counts():
    for d in range(3, 51):
        profile = high_good_profile(d)
        assert profile.mu_K == d - 2
        assert profile.ulrich.mu_C == profile.ulrich.e_C == d - 3
        assert (profile.label == ClassLabel.GORENSTEIN_GRADED) == (d == 3)


def test_high_good_profile_needs_dimension_three():
    with pytest.raises(PreconditionError):
        high_good_profile(2)


@pytest.mark.parametrize("d", range(4, 12))
def test_graded_obstruction(d):
    obstruction = high_good_graded_obstruction(d)
    assert obstruction.mu_C == d - 3
    assert obstruction.contradicts_ulrich


@pytest.mark.parametrize(
    ("d", "v", "holds"), [(4, 4, True), (4, 5, False), (6, 6, True), (6, 7, False)]
)
def test_embedding_dimension_test(d, v, holds):
    assert high_good_embedding_test(d, v) is holds


def test_embedding_dimension_below_dimension_is_rejected():
    with pytest.raises(PreconditionError):
        high_good_embedding_test(5, 4)
