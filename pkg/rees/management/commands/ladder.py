from __future__ import annotations

from rees.canonical import ladder_report
from rees.management.base import ReesCommand
from rees.serializers import LadderQuerySerializer, LadderReportSerializer


class Command(ReesCommand):
    help = "Print the canonical-module ladder of R(m^ell) and the counts it determines."
    query_serializer_class = LadderQuerySerializer

    def add_arguments(self, parser):
        parser.add_argument("--d", type=int, required=True)
        parser.add_argument("--ell", type=int, required=True)
        parser.add_argument(
            "--nmax", type=int, help="Also list the components in degrees 1..nmax."
        )
        self.add_format_argument(parser)

    def run(self, renderer, *, d, ell, nmax):
        return renderer.render_record(LadderReportSerializer(ladder_report(d, ell, nmax)).data)
