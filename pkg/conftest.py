"""Shared pytest fixtures.

Test settings live in ``ReesAlgebraLab.settings_test``; pytest-django loads
them before this module is imported.
"""

from pathlib import Path

import pytest

from rees.monomials import MonomialIdeal, format_ideal, maximal_power, pure_powers

DATA_DIR = Path(__file__).resolve().parent / "rees" / "tests" / "data"


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def write_ideal(tmp_path):
    """Write an ideal (or raw text) to a file under ``tmp_path`` and return the path."""

    def _write(content: MonomialIdeal | str, name: str = "ideal.txt") -> Path:
        path = tmp_path / name
        text = content if isinstance(content, str) else format_ideal(content)
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def m_squared_3():
    """``m^2`` in three variables with its pure-power reduction."""
    return maximal_power(3, 2), pure_powers(3, 2)
