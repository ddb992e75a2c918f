"""Output format registry.

``--format`` picks the implementation; commands depend only on the
:class:`Renderer` interface.
"""

from __future__ import annotations

from django.conf import settings

from ..errors import PreconditionError
from .ascii_table import AsciiRenderer
from .base import Renderer, flatten
from .csv_table import CsvRenderer
from .json_table import JsonRenderer

_RENDERERS: dict[str, type[Renderer]] = {
    AsciiRenderer.name: AsciiRenderer,
    JsonRenderer.name: JsonRenderer,
    CsvRenderer.name: CsvRenderer,
}


def get_renderer(name: str | None = None) -> Renderer:
    """Instantiate the renderer for ``name`` (``REES_DEFAULT_FORMAT`` when omitted)."""
    format_name = (name or settings.REES_DEFAULT_FORMAT).lower()
    try:
        renderer_class = _RENDERERS[format_name]
    except KeyError:
        known = ", ".join(sorted(_RENDERERS))
        raise PreconditionError(
            f"Unknown output format {format_name!r}. Available: {known}."
        ) from None
    return renderer_class()


__all__ = [
    "AsciiRenderer",
    "CsvRenderer",
    "JsonRenderer",
    "Renderer",
    "flatten",
    "get_renderer",
]
