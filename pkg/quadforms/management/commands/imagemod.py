from quadforms.cli import QuadformsCommand
from quadforms.services import get_service
from quadforms.valuesets import RESTRICTIONS


class Command(QuadformsCommand):
    help = "Residues of f(alpha, beta) modulo m."

    def add_arguments(self, parser):
        parser.add_argument("form", help="Coefficients a,b,c.")
        parser.add_argument("m", type=int, help="Modulus, at least 2.")
        parser.add_argument("--restriction", choices=RESTRICTIONS, default="all")

    def build_payload(self, **options):
        return get_service().imagemod(options["form"], options["m"], options["restriction"])
