from __future__ import annotations

from rees.management.base import ReesCommand
from rees.monomials import colon, parse_ideal_file
from rees.serializers import ColonQuerySerializer, ColonResultSerializer


class Command(ReesCommand):
    help = "Compute the colon ideal lhs : rhs of two ideal files."
    query_serializer_class = ColonQuerySerializer

    def add_arguments(self, parser):
        parser.add_argument("lhs", help="Ideal file for the numerator.")
        parser.add_argument("rhs", help="Ideal file for the divisor.")
        parser.add_argument(
            "--d", type=int, help="Number of variables; read from the files if omitted."
        )
        self.add_format_argument(parser)

    def run(self, renderer, *, lhs, rhs, d=None):
        left = parse_ideal_file(lhs, dim=d)
        right = parse_ideal_file(rhs, dim=d)
        result = {"dim": left.dim, "lhs": left, "rhs": right, "colon": colon(left, right)}
        return renderer.render_record(ColonResultSerializer(result).data)
