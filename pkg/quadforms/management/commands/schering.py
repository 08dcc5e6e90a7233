from quadforms.cli import QuadformsCommand
from quadforms.services import get_service


class Command(QuadformsCommand):
    help = (
        "Determinant, order and species of aX^2 + 2bXY + cY^2; with a second form, "
        "whether the two have the same values."
    )

    def add_arguments(self, parser):
        parser.add_argument("first", help="a,b,c of aX^2 + 2bXY + cY^2.")
        parser.add_argument("second", nargs="?", help="A,B,C of a second form.")

    def build_payload(self, **options):
        return get_service().schering(options["first"], options.get("second"))
