from quadforms.cli import QuadformsCommand
from quadforms.services import get_service


class Command(QuadformsCommand):
    help = "Classify a form a,b,c as ordinary, lower extraordinary or upper extraordinary."

    def add_arguments(self, parser):
        parser.add_argument("form", help="Coefficients a,b,c (use -- before a leading minus sign).")

    def build_payload(self, **options):
        return get_service().classify(options["form"])
