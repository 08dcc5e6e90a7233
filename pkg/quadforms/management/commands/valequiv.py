from quadforms.cli import QuadformsCommand
from quadforms.services import get_service


class Command(QuadformsCommand):
    help = "Decide whether two forms have the same value set."

    def add_arguments(self, parser):
        parser.add_argument("first", help="Coefficients a,b,c of the first form.")
        parser.add_argument("second", help="Coefficients a,b,c of the second form.")

    def build_payload(self, **options):
        return get_service().valequiv(options["first"], options["second"])
