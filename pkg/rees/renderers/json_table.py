from __future__ import annotations

from collections.abc import Mapping

from rest_framework.renderers import JSONRenderer as DRFJSONRenderer

from ..classification import ClassificationTable
from ..serializers import CellSerializer
from .base import Renderer


class JsonRenderer(Renderer):
    """Pretty-printed JSON, rendered by REST framework so numbers stay exact."""

    name = "json"

    def _dump(self, data) -> str:
        return DRFJSONRenderer().render(data, renderer_context={"indent": 2}).decode("utf-8")

    def render_table(self, table: ClassificationTable) -> str:
        return self._dump(CellSerializer(table.cells, many=True).data)

    def render_record(self, record: Mapping) -> str:
        return self._dump(record)
