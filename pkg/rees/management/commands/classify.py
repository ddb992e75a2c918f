from __future__ import annotations

from rees.classification import Cell, classify
from rees.management.base import ReesCommand
from rees.serializers import CellSerializer, ClassifyQuerySerializer


class Command(ReesCommand):
    help = "Classify a single R(m^ell) and print the evidence."
    query_serializer_class = ClassifyQuerySerializer

    def add_arguments(self, parser):
        parser.add_argument("--d", type=int, required=True)
        parser.add_argument("--ell", type=int, required=True)
        self.add_format_argument(parser)

    def run(self, renderer, *, d, ell):
        label, evidence = classify(d, ell)
        cell = Cell(d=d, ell=ell, label=label, evidence=evidence)
        return renderer.render_record(CellSerializer(cell).data)
