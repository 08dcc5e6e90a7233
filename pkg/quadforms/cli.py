"""
Command-line front end.

Every subcommand is a Django management command built on ``QuadformsCommand``
and prints one canonical JSON document. ``dispatch`` runs the same commands
in-process and returns a ``CommandResult``.

Exit status: 0 ok, 1 domain error, 2 usage error. ``--bound N`` lowers the
class enumeration, period and witness caps to N for one run.
"""

import argparse
import io
import json
import logging
from contextlib import redirect_stdout
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

from django.core.management import load_command_class
from django.core.management.base import BaseCommand, CommandError
from django.test import override_settings

from .errors import QuadraticFormError

logger = logging.getLogger(__name__)

COMMANDS = (
    "classify",
    "valequiv",
    "classnum",
    "unit",
    "valueset",
    "imagemod",
    "survey",
    "schering",
)

EXIT_OK, EXIT_DOMAIN_ERROR, EXIT_USAGE = 0, 1, 2

CAP_SETTINGS = ("QF_CLASS_BOUND", "QF_PERIOD_CAP", "QF_WITNESS_BOUND")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cap_overrides(cap) -> Dict[str, int]:
    if cap is None:
        return {}
    return {name: cap for name in CAP_SETTINGS}


def run_with_caps(command: "QuadformsCommand", options: Dict[str, Any]) -> Any:
    with override_settings(**cap_overrides(options.get("cap"))):
        return command.build_payload(**options)


def canonical_json(payload: Any) -> str:
    """Sorted keys, compact separators, UTF-8 text; re-serialising is byte-identical."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass(frozen=True)
class CommandResult:
    command: str
    argv: List[str] = field(default_factory=list)
    payload: Any = None
    status: int = EXIT_OK

    @property
    def ok(self) -> bool:
        return self.status == EXIT_OK

    def render(self) -> str:
        return canonical_json(self.payload)


class QuadformsCommand(BaseCommand):
    """Base class: subclasses add arguments and implement ``build_payload``."""

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.add_argument(
            "--json", action="store_true", help="Emit JSON (the only format; accepted for scripts)."
        )
        parser.add_argument(
            "--bound",
            dest="cap",
            type=_positive_int,
            help="Override " + ", ".join(CAP_SETTINGS) + " for this run.",
        )
        return parser

    def build_payload(self, **options) -> Any:
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            payload = run_with_caps(self, options)
        except QuadraticFormError as e:
            logger.error(f"{self.__module__.rsplit('.', 1)[-1]} failed: {e}")
            self.stdout.write(canonical_json(e.to_payload()))
            raise CommandError(str(e), returncode=EXIT_DOMAIN_ERROR)
        self.stdout.write(canonical_json(payload))


def _usage(command: str, argv: List[str], message: str) -> CommandResult:
    return CommandResult(
        command=command,
        argv=argv,
        payload={"error": "usage", "message": message},
        status=EXIT_USAGE,
    )


def dispatch(argv: Sequence[str]) -> CommandResult:
    """Run ``<subcommand> [args...]`` in-process."""
    argv = [str(arg) for arg in argv]
    if not argv:
        return _usage("", [], f"expected one of: {', '.join(COMMANDS)}")
    name, args = argv[0], argv[1:]
    if name not in COMMANDS:
        return _usage(name, args, f"unknown command {name!r}; expected one of: {', '.join(COMMANDS)}")

    command = load_command_class("quadforms", name)
    parser = command.create_parser("manage.py", name)
    printed = io.StringIO()
    try:
        with redirect_stdout(printed):
            options = vars(parser.parse_args(args))
    except CommandError as e:
        return _usage(name, args, str(e))
    except SystemExit as e:
        # --help and --version exit from argparse
        if e.code in (0, None):
            return CommandResult(command=name, argv=args, payload={"help": printed.getvalue()})
        return _usage(name, args, printed.getvalue().strip() or f"exit status {e.code}")

    try:
        payload = run_with_caps(command, options)
    except QuadraticFormError as e:
        logger.error(f"{name} failed: {e}")
        return CommandResult(command=name, argv=args, payload=e.to_payload(), status=EXIT_DOMAIN_ERROR)
    return CommandResult(command=name, argv=args, payload=payload, status=EXIT_OK)
