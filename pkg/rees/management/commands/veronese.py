from __future__ import annotations

from rees.certificates import veronese_report
from rees.management.base import ReesCommand
from rees.serializers import VeroneseQuerySerializer, VeroneseReportSerializer


class Command(ReesCommand):
    help = "Verify the almost Gorenstein identities for powers of m in the degree-r Veronese ring."
    query_serializer_class = VeroneseQuerySerializer

    def add_arguments(self, parser):
        parser.add_argument("--r", type=int, required=True, help="Veronese degree, at least 2.")
        parser.add_argument("--ell", type=int, required=True)
        self.add_format_argument(parser)

    def run(self, renderer, *, r, ell):
        return renderer.render_record(VeroneseReportSerializer(veronese_report(r, ell)).data)
