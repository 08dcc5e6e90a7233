from quadforms.cli import QuadformsCommand
from quadforms.services import get_service


class Command(QuadformsCommand):
    help = "Count D58, S58, G58 and the Eisenstein set up to X and run the density checks."

    def add_arguments(self, parser):
        parser.add_argument("--max", dest="bound", type=int, required=True, help="Sweep bound X.")
        parser.add_argument("--csv", dest="csv_path", help="Write one row per d to this CSV file.")
        parser.add_argument("--rows", action="store_true", help="Include per-d rows in the JSON.")
        parser.add_argument("--record", action="store_true", help="Store the run in the database.")

    def build_payload(self, **options):
        return get_service().survey(
            options["bound"],
            rows=options["rows"],
            csv_path=options["csv_path"],
            record=options["record"],
        )
