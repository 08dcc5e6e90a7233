from quadforms.cli import QuadformsCommand
from quadforms.services import get_service


class Command(QuadformsCommand):
    help = "Sorted values n with |n| <= M represented by a primitive form."

    def add_arguments(self, parser):
        parser.add_argument("form", help="Coefficients a,b,c.")
        parser.add_argument("--max", dest="bound", type=int, required=True, help="Window bound M.")
        parser.add_argument(
            "--primitive",
            action="store_true",
            help="Only values taken at coprime (x, y).",
        )

    def build_payload(self, **options):
        return get_service().valueset(options["form"], options["bound"], options["primitive"])
