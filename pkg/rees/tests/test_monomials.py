import random

import pytest

from rees.combinatorics import colength_power, mu_power
from rees.errors import DimensionMismatch, IdealFileError, NotPrimaryError, PreconditionError
from rees.monomials import (
    MAX_EXPONENT,
    Monomial,
    MonomialIdeal,
    brute_colength,
    brute_colon,
    colength,
    colon,
    contains,
    equals,
    format_ideal,
    ideal_intersection,
    ideal_sum,
    maximal_power,
    minimalize,
    multiplicity,
    oracle_check,
    parse_ideal_file,
    parse_ideal_text,
    power,
    principal,
    product,
    pure_power_bounds,
    pure_powers,
    random_ideal,
    sufficient_colon_bound,
)

from .oracles import monomials_of_degree


def ideal(*gens):
    return minimalize(Monomial(g) for g in gens)


# --------------------------------------------------------------------------
# Monomials
# --------------------------------------------------------------------------


def test_monomial_rejects_negative_exponents():
    with pytest.raises(PreconditionError):
        Monomial((1, -1))


def test_monomial_rejects_exponents_above_the_limit():
    with pytest.raises(OverflowError):
        Monomial((MAX_EXPONENT + 1, 0))


@pytest.mark.parametrize(
    ("exponents", "text"),
    [((2, 1), "x^2y"), ((0, 0), "1"), ((1, 0, 3), "xz^3"), ((0, 0, 0, 0, 2), "x5^2")],
)
def test_monomial_text(exponents, text):
    assert str(Monomial(exponents)) == text


def test_monomial_arithmetic():
    a, b = Monomial((2, 0, 1)), Monomial((1, 3, 0))
    assert (a * b).exponents == (3, 3, 1)
    assert a.lcm(b).exponents == (2, 3, 1)
    assert Monomial((1, 0, 1)).divides(a)
    assert not b.divides(a)
    assert a.degree == 3
    assert a.support == 2


def test_mixed_dimensions_are_rejected():
    with pytest.raises(DimensionMismatch):
        Monomial((1, 0)) * Monomial((1, 0, 0))
    with pytest.raises(DimensionMismatch):
        product(maximal_power(2, 1), maximal_power(3, 1))


# --------------------------------------------------------------------------
# Ideal arithmetic
# --------------------------------------------------------------------------


def test_minimalize_drops_multiples():
    result = ideal((1, 0), (2, 1), (0, 3), (1, 4))
    assert result.exponents == frozenset({(1, 0), (0, 3)})
    assert str(result) == "(x, y^3)"


def test_minimalize_of_nothing_needs_a_dimension():
    with pytest.raises(PreconditionError):
        minimalize([])
    assert minimalize([], dim=2).is_zero


@pytest.mark.parametrize(("d", "ell"), [(2, 5), (3, 3), (4, 2), (5, 1)])
def test_maximal_power_generator_count(d, ell):
    m_ell = maximal_power(d, ell)
    assert len(m_ell) == mu_power(d, ell)
    assert set(m_ell.exponents) == set(monomials_of_degree(d, ell))


def test_minimalize_is_idempotent_and_ignores_order():
    rng = random.Random(7)
    for _ in range(100):
        dim = rng.randint(1, 4)
        gens = [
            Monomial(tuple(rng.randint(0, 5) for _ in range(dim)))
            for _ in range(rng.randint(1, 8))
        ]
        once = minimalize(gens)
        assert minimalize(once.gens) == once
        shuffled = list(gens)
        rng.shuffle(shuffled)
        assert minimalize(shuffled) == once


def test_power_of_maximal_ideal():
    assert equals(power(maximal_power(3, 1), 4), maximal_power(3, 4))
    assert power(maximal_power(3, 2), 0).is_unit


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("ell", range(0, 7))
def test_powers_of_m_are_maximal_powers(d, ell):
    assert equals(power(maximal_power(d, 1), ell), maximal_power(d, ell))


def test_powers_add_exponents():
    rng = random.Random(5)
    for _ in range(40):
        dim = rng.randint(1, 3)
        base = random_ideal(rng, dim, 3, max_gens=3)
        a = rng.randint(0, 3)
        b = rng.randint(0, 6 - a)
        assert equals(product(power(base, a), power(base, b)), power(base, a + b))


def test_sum_and_intersection():
    x, y = principal(Monomial((1, 0))), principal(Monomial((0, 1)))
    assert equals(ideal_intersection(x, y), principal(Monomial((1, 1))))
    assert equals(ideal_sum(x, y), maximal_power(2, 1))


def test_containment_direction():
    m2 = maximal_power(2, 2)
    q = pure_powers(2, 2)
    assert contains(m2, q)
    assert not contains(q, m2)


def test_membership():
    q = pure_powers(3, 2)
    assert Monomial((3, 1, 0)) in q
    assert Monomial((1, 1, 1)) not in q


# --------------------------------------------------------------------------
# Colon
# --------------------------------------------------------------------------


@pytest.mark.parametrize("ell", range(2, 7))
def test_pure_powers_colon_maximal_power(ell):
    assert equals(colon(pure_powers(2, ell), maximal_power(2, ell)), maximal_power(2, ell - 1))


def test_socle_element_of_pure_powers():
    q = pure_powers(3, 5)
    result = colon(q, maximal_power(3, 1))
    assert Monomial((4, 4, 4)) in result
    assert equals(result, ideal_sum(q, principal(Monomial((4, 4, 4)))))
    assert equals(result, brute_colon(q, maximal_power(3, 1), sufficient_colon_bound(q)))


def test_colon_times_divisor_lies_in_the_ideal():
    rng = random.Random(13)
    for _ in range(200):
        dim = rng.randint(1, 3)
        numerator = random_ideal(rng, dim, 5)
        divisor = random_ideal(rng, dim, 5)
        assert contains(numerator, product(colon(numerator, divisor), divisor))


def test_colon_by_a_contained_ideal_is_the_unit_ideal():
    assert colon(maximal_power(3, 2), maximal_power(3, 3)).is_unit


def test_colon_by_zero_is_refused():
    with pytest.raises(PreconditionError):
        colon(maximal_power(2, 1), MonomialIdeal.zero(2))


def test_fast_colon_matches_enumeration_on_random_pairs():
    report = oracle_check(trials=200, seed=20240501, dim_max=3, max_degree=5)
    assert report.ok
    assert report.first_mismatch is None


def test_random_ideals_are_seeded():
    first = random_ideal(random.Random(7), 3, 5)
    second = random_ideal(random.Random(7), 3, 5)
    assert first == second
    assert not first.is_zero


# --------------------------------------------------------------------------
# Colength and multiplicity
# --------------------------------------------------------------------------


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("ell", range(1, 5))
def test_colength_of_maximal_powers(d, ell):
    assert colength(maximal_power(d, ell)) == colength_power(d, ell)


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("k", range(0, 9))
def test_power_counts_match_enumeration(d, k):
    m_k = maximal_power(d, k)
    assert len(m_k) == mu_power(d, k) == len(monomials_of_degree(d, k))
    below = sum(len(monomials_of_degree(d, degree)) for degree in range(k))
    assert colength(m_k) == colength_power(d, k) == below


def test_colength_matches_box_enumeration():
    rng = random.Random(11)
    for _ in range(50):
        dim = rng.randint(1, 3)
        primary = ideal_sum(random_ideal(rng, dim, 6), pure_powers(dim, rng.randint(2, 7)))
        assert colength(primary) == brute_colength(primary)


def test_colength_needs_a_primary_ideal():
    with pytest.raises(NotPrimaryError) as excinfo:
        colength(ideal((2, 0), (1, 1)))
    assert excinfo.value.variable == 1


def test_pure_power_bounds():
    assert pure_power_bounds(ideal((3, 0), (1, 1), (0, 2))) == [3, 2]


@pytest.mark.parametrize(
    ("d", "ell"), [(d, ell) for d in range(1, 6) for ell in range(1, 5) if d * ell <= 16]
)
def test_multiplicity_of_maximal_powers(d, ell):
    assert multiplicity(maximal_power(d, ell)) == ell**d


@pytest.mark.slow
def test_multiplicity_of_a_large_maximal_power():
    assert multiplicity(maximal_power(5, 4)) == 4**5


def test_multiplicity_of_a_parameter_ideal():
    assert multiplicity(pure_powers(3, 2)) == 8


def test_multiplicity_when_colength_is_polynomial_only_from_the_second_power():
    # Integral closure m^4, but x^2 y^2 is missing from the first power only.
    shifted = ideal((4, 0), (3, 1), (1, 3), (0, 4))
    assert [colength(power(shifted, n)) for n in range(1, 5)] == [11, 36, 78, 136]
    assert multiplicity(shifted) == 16


def test_multiplicity_refuses_when_no_window_is_polynomial():
    shifted = ideal((4, 0), (3, 1), (1, 3), (0, 4))
    with pytest.raises(PreconditionError, match="not yet polynomial"):
        multiplicity(shifted, max_start=1)


# --------------------------------------------------------------------------
# Ideal files
# --------------------------------------------------------------------------


def test_parse_skips_comments_and_blank_lines():
    parsed = parse_ideal_text("# m^2\n\n2 0\n1 1\n   \n0 2\n")
    assert equals(parsed, maximal_power(2, 2))


def test_format_then_parse_gives_the_same_ideal():
    original = ideal((3, 0, 1), (0, 2, 2), (1, 1, 1))
    assert parse_ideal_text(format_ideal(original)) == original


def test_parse_reports_file_and_line():
    with pytest.raises(IdealFileError, match=r"^gens\.txt:3: "):
        parse_ideal_text("2 0\n1 1\n1 x\n", source="gens.txt")


def test_parse_rejects_ragged_rows():
    with pytest.raises(IdealFileError) as excinfo:
        parse_ideal_text("2 0\n1 1 1\n")
    assert excinfo.value.line == 2


def test_parse_rejects_dimension_mismatch_with_explicit_dim():
    with pytest.raises(IdealFileError):
        parse_ideal_text("1 0 0\n", dim=2)


def test_parse_file(data_dir):
    assert equals(parse_ideal_file(data_dir / "m_cubed_2.txt"), maximal_power(2, 3))


def test_missing_file_is_an_ideal_file_error(tmp_path):
    with pytest.raises(IdealFileError, match="cannot read file"):
        parse_ideal_file(tmp_path / "nope.txt")


@pytest.mark.parametrize("line", ["1_0 0", "٣ 0", "+1 0", "1.0 0"])
def test_parse_accepts_plain_ascii_digits_only(line):
    with pytest.raises(IdealFileError, match="not an integer exponent list") as excinfo:
        parse_ideal_text(f"0 2\n{line}\n")
    assert excinfo.value.line == 2


def test_parse_rejects_negative_exponents():
    with pytest.raises(IdealFileError, match="non-negative"):
        parse_ideal_text("2 -1\n")


def test_parse_file_with_byte_order_mark(tmp_path):
    path = tmp_path / "bom.txt"
    path.write_text("2 0\n1 1\n0 2\n", encoding="utf-8-sig")
    assert equals(parse_ideal_file(path), maximal_power(2, 2))
