from __future__ import annotations

from rees.certificates import check_certificate
from rees.management.base import ReesCommand
from rees.serializers import CertificateQuerySerializer, CertificateSerializer


class Command(ReesCommand):
    help = "Emit the (f, g, h) certificate for m^ell in dimension 2 and check it degree by degree."
    query_serializer_class = CertificateQuerySerializer

    def add_arguments(self, parser):
        parser.add_argument("--dim", type=int, help="Only 2 is supported.")
        parser.add_argument("--ell", type=int, required=True)
        parser.add_argument(
            "--nmax", type=int, help="Last Rees degree to check (default: REES_CLAIM_DEGREES)."
        )
        self.add_format_argument(parser)

    def run(self, renderer, *, dim, ell, nmax):
        return renderer.render_record(CertificateSerializer(check_certificate(ell, nmax)).data)
