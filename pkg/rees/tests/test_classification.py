import pytest

from rees.classification import (
    RULE_LABELS,
    ClassLabel,
    RuleFired,
    classify,
    cross_check,
    table,
)
from rees.errors import PreconditionError

from .oracles import read_golden_table


def test_table_matches_golden_file(data_dir):
    golden = read_golden_table(data_dir / "classification_table.txt")
    grid = table(10, 9)
    assert len(grid.cells) == 81
    assert {(cell.d, cell.ell): str(cell.label) for cell in grid.cells} == golden


def test_table_is_d_major():
    grid = table(4, 3)
    assert [(cell.d, cell.ell) for cell in grid.cells] == [
        (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3),
    ]
    assert [cell.ell for cell in grid.rows()[1]] == [1, 2, 3]
    assert grid.label_at(3, 2) == ClassLabel.GORENSTEIN_GRADED


def test_worker_pool_keeps_order():
    assert table(10, 9, workers=4).cells == table(10, 9, workers=1).cells


def test_table_rejects_small_bounds():
    with pytest.raises(PreconditionError):
        table(1, 1)


@pytest.mark.parametrize(
    ("d", "ell", "label", "rule"),
    [
        (2, 1, ClassLabel.GORENSTEIN_GRADED, RuleFired.GORENSTEIN_DIAGONAL),
        (2, 7, ClassLabel.ALMOST_GORENSTEIN_GRADED, RuleFired.DIMENSION_TWO),
        (6, 1, ClassLabel.ALMOST_GORENSTEIN_GRADED, RuleFired.PARAMETER_IDEAL),
        (4, 3, ClassLabel.GORENSTEIN_GRADED, RuleFired.GORENSTEIN_DIAGONAL),
        (9, 4, ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY, RuleFired.DIVISOR_AGL),
        (4, 2, ClassLabel.NONE, RuleFired.GAP_POSITIVE),
    ],
)
def test_classify_rules(d, ell, label, rule):
    got, evidence = classify(d, ell)
    assert got == label
    assert evidence.rule_fired == rule
    assert RULE_LABELS[rule] == label
    assert evidence.citation


def test_local_only_cell_carries_obstruction_and_ulrich_numbers():
    label, evidence = classify(5, 2)
    assert label == ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY
    assert evidence.gap == 0
    assert evidence.mu_K == 2
    assert evidence.obstruction.e_bound == 32
    assert evidence.obstruction.mu_bound == 1
    assert evidence.ulrich.c == 1
    assert evidence.associated_graded_gorenstein


def test_none_cell_evidence():
    _label, evidence = classify(4, 2)
    assert evidence.gap == 4
    assert evidence.mu_K == 5
    assert evidence.obstruction is None
    assert evidence.ulrich is None
    assert not evidence.associated_graded_gorenstein


def test_dimension_two_has_no_gap():
    _label, evidence = classify(2, 4)
    assert evidence.gap is None


def test_classify_rejects_bad_arguments():
    with pytest.raises(PreconditionError):
        classify(1, 1)
    with pytest.raises(PreconditionError):
        classify(3, 0)


def test_labels_are_ordered_by_strength():
    labels = [
        ClassLabel.GORENSTEIN_GRADED,
        ClassLabel.NONE,
        ClassLabel.ALMOST_GORENSTEIN_GRADED,
        ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY,
    ]
    assert sorted(labels) == [
        ClassLabel.NONE,
        ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY,
        ClassLabel.ALMOST_GORENSTEIN_GRADED,
        ClassLabel.GORENSTEIN_GRADED,
    ]
    assert ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY < ClassLabel.ALMOST_GORENSTEIN_GRADED


@pytest.mark.slow
def test_cross_check_holds_on_the_higher_grid():
    for d in range(3, 31):
        for ell in range(2, 31):
            assert cross_check(d, ell), (d, ell)


def test_diagonal_is_gorenstein():
    for d in range(2, 51):
        label, evidence = classify(d, d - 1)
        assert label == ClassLabel.GORENSTEIN_GRADED, d
        assert evidence.rule_fired == RuleFired.GORENSTEIN_DIAGONAL


def test_cross_check_needs_the_higher_range():
    with pytest.raises(PreconditionError):
        cross_check(2, 2)
