"""Aligned plain-text output; the grid uses the Gor / AG / AGL / X labels."""

from __future__ import annotations

from collections.abc import Mapping

from ..classification import ClassificationTable
from .base import Renderer, flatten

CORNER = "d\\l"


def _format_value(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


class AsciiRenderer(Renderer):
    name = "ascii"

    def render_table(self, table: ClassificationTable) -> str:
        header = [CORNER, *(str(ell) for ell in range(1, table.ell_max + 1))]
        rows = [header]
        for row in table.rows():
            rows.append([str(row[0].d), *(str(cell.label) for cell in row)])
        widths = [max(len(row[column]) for row in rows) for column in range(len(header))]
        lines = [
            " | ".join(text.rjust(width) for text, width in zip(row, widths, strict=True))
            for row in rows
        ]
        lines.insert(1, "-+-".join("-" * width for width in widths))
        return "\n".join(lines)

    def render_record(self, record: Mapping) -> str:
        pairs = list(flatten(record))
        width = max((len(key) for key, _ in pairs), default=0)
        return "\n".join(f"{key.ljust(width)}  {_format_value(value)}" for key, value in pairs)
