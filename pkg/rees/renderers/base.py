"""Format-agnostic rendering interface.

Commands hand a :class:`~rees.classification.ClassificationTable` or an
already-serialized record to a :class:`Renderer` and write whatever string it
returns to stdout.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterator, Mapping

from ..classification import ClassificationTable


def flatten(record: Mapping, prefix: str = "") -> Iterator[tuple[str, object]]:
    """Dotted ``(key, value)`` pairs of a nested record, lists kept whole."""
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, Mapping):
            yield from flatten(value, prefix=f"{name}.")
        else:
            yield name, value


class Renderer(ABC):
    """Contract every output format must satisfy."""

    name: str

    @abstractmethod
    def render_table(self, table: ClassificationTable) -> str:
        """Render a classification grid, d-major."""

    @abstractmethod
    def render_record(self, record: Mapping) -> str:
        """Render one serialized record."""
