from quadforms.cli import QuadformsCommand
from quadforms.services import get_service


class Command(QuadformsCommand):
    help = "Class numbers h+, h, h* and class representatives of a discriminant."

    def add_arguments(self, parser):
        parser.add_argument("d", type=int, help="Non-square discriminant, 0 or 1 mod 4.")

    def build_payload(self, **options):
        return get_service().classnum(options["d"])
