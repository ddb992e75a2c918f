"""Independent reference computations used only by the tests."""

from __future__ import annotations

import itertools
from pathlib import Path


def pascal_rows(n_max: int) -> list[list[int]]:
    rows = [[1]]
    for _ in range(n_max):
        previous = rows[-1]
        rows.append([1, *(a + b for a, b in itertools.pairwise(previous)), 1])
    return rows


def pascal_binom(rows: list[list[int]], n: int, m: int) -> int:
    if m < 0 or m > n:
        return 0
    return rows[n][m]


def monomials_of_degree(dim: int, degree: int) -> list[tuple[int, ...]]:
    """Every exponent vector of the given degree, by filtering a box."""
    return [
        e for e in itertools.product(range(degree + 1), repeat=dim) if sum(e) == degree
    ]


def read_golden_table(path: Path) -> dict[tuple[int, int], str]:
    """``{(d, ell): label}`` from the transcribed classification table."""
    cells = {}
    lines = [
        line.split()
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.startswith("#")
    ]
    header, rows = lines[0], lines[1:]
    ells = [int(value) for value in header[1:]]
    for row in rows:
        d = int(row[0])
        for ell, label in zip(ells, row[1:], strict=True):
            cells[(d, ell)] = label
    return cells


def parse_ascii_table(text: str) -> dict[tuple[int, int], str]:
    lines = [line for line in text.splitlines() if line.strip()]
    header = [value.strip() for value in lines[0].split("|")]
    ells = [int(value) for value in header[1:]]
    cells = {}
    # lines[1] is the rule under the header.
    for line in lines[2:]:
        values = [value.strip() for value in line.split("|")]
        d = int(values[0])
        for ell, label in zip(ells, values[1:], strict=True):
            cells[(d, ell)] = label
    return cells
