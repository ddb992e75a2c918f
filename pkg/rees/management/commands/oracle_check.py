"""Compare the fast colon with brute-force enumeration on seeded random ideals.

    python manage.py oracle_check --trials 200 --seed 20240501
"""

from __future__ import annotations

from rees.management.base import ReesCommand
from rees.monomials import oracle_check
from rees.serializers import OracleCheckQuerySerializer, OracleReportSerializer


class Command(ReesCommand):
    help = "Randomized colon-versus-enumeration check; exits 1 on a mismatch."
    query_serializer_class = OracleCheckQuerySerializer

    def add_arguments(self, parser):
        parser.add_argument(
            "--trials", type=int, help="Number of pairs (default: REES_ORACLE_TRIALS)."
        )
        parser.add_argument("--seed", type=int, help="Random seed (default: REES_ORACLE_SEED).")
        parser.add_argument("--dmax", type=int, help="Largest number of variables.")
        parser.add_argument("--max-degree", type=int, help="Largest generator degree.")
        self.add_format_argument(parser)

    def run(self, renderer, *, trials, seed, dmax, max_degree):
        report = oracle_check(trials, seed, dmax, max_degree)
        output = renderer.render_record(OracleReportSerializer(report).data)
        if not report.ok:
            self.counterexample(output, f"{report.mismatches} colon mismatches out of {trials}.")
        return output
