from __future__ import annotations

from rees.good_ideals import good_report
from rees.management.base import ReesCommand
from rees.monomials import parse_ideal_file
from rees.serializers import GoodIdealReportSerializer, GoodCheckQuerySerializer


class Command(ReesCommand):
    help = "Test whether I is good with respect to the reduction Q (I^2 = QI and Q : I = I)."
    query_serializer_class = GoodCheckQuerySerializer

    def add_arguments(self, parser):
        parser.add_argument(
            "--d", type=int, help="Number of variables; read from the files if omitted."
        )
        parser.add_argument("--ideal", required=True, help="Ideal file for I.")
        parser.add_argument("--reduction", required=True, help="Ideal file for Q.")
        self.add_format_argument(parser)

    def run(self, renderer, *, ideal, reduction, d=None):
        report = good_report(parse_ideal_file(ideal, dim=d), parse_ideal_file(reduction, dim=d))
        return renderer.render_record(GoodIdealReportSerializer(report).data)
