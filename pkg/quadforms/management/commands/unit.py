from quadforms.cli import QuadformsCommand
from quadforms.services import get_service


class Command(QuadformsCommand):
    help = "Fundamental unit x + y*omega of the real quadratic order of discriminant d."

    def add_arguments(self, parser):
        parser.add_argument("d", type=int, help="Positive non-square discriminant.")

    def build_payload(self, **options):
        return get_service().unit(options["d"])
