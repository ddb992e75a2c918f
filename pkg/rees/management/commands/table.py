"""Render the classification grid.

    python manage.py table --dmax 10 --lmax 9
"""

from __future__ import annotations

from rees.classification import table
from rees.management.base import ReesCommand
from rees.serializers import TableQuerySerializer


class Command(ReesCommand):
    help = "Classify R(m^ell) for 2 <= d <= dmax and 1 <= ell <= lmax."
    query_serializer_class = TableQuerySerializer

    def add_arguments(self, parser):
        parser.add_argument(
            "--dmax", type=int, help="Largest dimension (default: REES_TABLE_D_MAX)."
        )
        parser.add_argument("--lmax", type=int, help="Largest power (default: REES_TABLE_ELL_MAX).")
        parser.add_argument("--workers", type=int, help="Worker threads for the grid.")
        self.add_format_argument(parser, default="ascii")

    def run(self, renderer, *, dmax, lmax, workers):
        return renderer.render_table(table(dmax, lmax, workers=workers))
