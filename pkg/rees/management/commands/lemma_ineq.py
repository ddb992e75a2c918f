"""Sweep the binomial inequality whose equality case is ``ell | d - 1``.

Exits 1 if some cell has a negative gap, a zero gap off the divisor set, or a
telescoped sum that differs from the direct difference.
"""

from __future__ import annotations

from rees.combinatorics import lemma_sweep
from rees.management.base import ReesCommand
from rees.serializers import LemmaIneqQuerySerializer, SweepReportSerializer


class Command(ReesCommand):
    help = "Check gap >= 0 with equality exactly when ell divides d - 1."
    query_serializer_class = LemmaIneqQuerySerializer

    def add_arguments(self, parser):
        parser.add_argument("--dmax", type=int, help="Largest d (default: REES_SWEEP_D_MAX).")
        parser.add_argument("--lmax", type=int, help="Largest ell (default: REES_SWEEP_ELL_MAX).")
        parser.add_argument(
            "--report-gaps", action="store_true", help="Include every (d, ell, gap) in the output."
        )
        self.add_format_argument(parser)

    def run(self, renderer, *, dmax, lmax, report_gaps):
        report = lemma_sweep(dmax, lmax)
        data = dict(SweepReportSerializer(report).data)
        if not report_gaps:
            data.pop("gaps")
        output = renderer.render_record(data)
        if not report.ok:
            d, ell, reason = report.counterexample
            self.counterexample(output, f"Counterexample at d={d}, ell={ell}: {reason}")
        return output
