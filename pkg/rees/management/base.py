"""Shared plumbing for the ``rees`` management commands.

Options are validated by a REST framework serializer, the computation runs in
:meth:`ReesCommand.run`, and failures are mapped to exit codes:

    0  success (verdicts such as "not good" or label X are data)
    1  a sweep found a mathematical counterexample
    2  invalid options, malformed input or a violated precondition
    3  an internal cross-check failed
"""

from __future__ import annotations

import logging
from collections.abc import Mapping

from django.core.management.base import BaseCommand, CommandError

from rees.errors import InvariantBreach, PreconditionError
from rees.renderers import Renderer, get_renderer

logger = logging.getLogger(__name__)

EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3


def _format_errors(errors) -> str:
    if isinstance(errors, Mapping):
        return "; ".join(f"{key}: {_format_errors(value)}" for key, value in errors.items())
    if isinstance(errors, list):
        return " ".join(_format_errors(item) for item in errors)
    return str(errors)


class ReesCommand(BaseCommand):
    query_serializer_class = None

    def add_format_argument(self, parser, default: str | None = None):
        parser.add_argument(
            "--format",
            choices=["ascii", "json", "csv"],
            default=default,
            help="Output format (default: REES_DEFAULT_FORMAT).",
        )

    def validate_options(self, options) -> dict:
        serializer_fields = self.query_serializer_class().fields
        data = {
            key: value
            for key, value in options.items()
            if key in serializer_fields and value is not None
        }
        serializer = self.query_serializer_class(data=data)
        if not serializer.is_valid():
            raise CommandError(_format_errors(serializer.errors), returncode=EXIT_USAGE)
        return dict(serializer.validated_data)

    def handle(self, *args, **options):
        params = self.validate_options(options)
        try:
            renderer = get_renderer(params.pop("format", None))
            output = self.run(renderer, **params)
        except InvariantBreach as exc:
            logger.exception("Internal cross-check failed in %s", self.__module__)
            raise CommandError(str(exc), returncode=EXIT_INVARIANT) from exc
        except PreconditionError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        self.stdout.write(output)

    def run(self, renderer: Renderer, **params) -> str:
        raise NotImplementedError

    def counterexample(self, output: str, message: str):
        """Print the report, then exit 1."""
        self.stdout.write(output)
        raise CommandError(message, returncode=EXIT_COUNTEREXAMPLE)
