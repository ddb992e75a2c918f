from __future__ import annotations

import csv
import io
import json
from collections.abc import Mapping

from ..classification import ClassificationTable
from .base import Renderer, flatten

TABLE_COLUMNS = ("d", "ell", "label", "rule_fired", "b", "mu_K", "gap")


class CsvRenderer(Renderer):
    """One row per cell for tables; ``key,value`` rows for records."""

    name = "csv"

    def _write(self, rows) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")

    def render_table(self, table: ClassificationTable) -> str:
        rows = [TABLE_COLUMNS]
        for cell in table.cells:
            evidence = cell.evidence
            gap = "" if evidence.gap is None else evidence.gap
            rows.append(
                (
                    cell.d,
                    cell.ell,
                    str(cell.label),
                    str(evidence.rule_fired),
                    evidence.b,
                    evidence.mu_K,
                    gap,
                )
            )
        return self._write(rows)

    def render_record(self, record: Mapping) -> str:
        rows = [("key", "value")]
        for key, value in flatten(record):
            # Lists (ideals, per-degree outcomes) go in as compact JSON.
            if isinstance(value, list | tuple):
                value = json.dumps(value, separators=(",", ":"))
            elif value is None:
                value = ""
            elif isinstance(value, bool):
                value = "true" if value else "false"
            rows.append((key, value))
        return self._write(rows)
