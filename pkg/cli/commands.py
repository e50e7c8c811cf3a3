"""
Base class of the management commands that read an input document.
"""

import logging
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from core.exceptions import DrinfeldError
from drinfeld.lift import required_depth, required_precision

from .documents import load_document, parse_document
from .serializers import dumps
from .summary import checks_section, to_html

logger = logging.getLogger(__name__)


def target_valuation(document):
    """The most negative valuation the document asks the lift to handle."""
    if document.element is not None:
        head = document.element.principal_part()
        if not head.is_exact_zero():
            return head.valuation()
    if len(document.lattice):
        return -document.lattice.max_abs_valuation()
    return None


def lift_parameters(document):
    """
    Depth and precision for the lift: given values, else the auto rules for
    the document's element or lattice, else depth 1 at the default precision.
    """
    spec = document.spec
    valuation = target_valuation(document)
    depth, prec = document.depth, document.prec
    if depth is None:
        depth = 1 if valuation is None else required_depth(spec.w, valuation, spec.p)
    if prec is None:
        if valuation is None:
            prec = settings.DRINFELD_DEFAULT_PRECISION
        else:
            prec = required_precision(valuation)
    return depth, prec


class DocumentCommand(BaseCommand):
    """
    Reads --input, runs build_report and writes the JSON report and the
    Markdown summary.  Computation errors leave with their exit code.
    """

    def add_arguments(self, parser):
        parser.add_argument(
            "--input", required=True, help="Input document (.json or .toml)"
        )
        parser.add_argument("--depth", default=None, help='tau-depth J or "auto"')
        parser.add_argument("--prec", default=None, help='Working precision or "auto"')
        parser.add_argument("--bound", default=None, help="Lattice valuation bound B")
        parser.add_argument(
            "--verify", action="store_true", help="Run the optional consistency checks"
        )
        parser.add_argument(
            "--json", dest="json_path", default=None, help="Write the JSON report here"
        )
        parser.add_argument(
            "--html", dest="html_path", default=None, help="Write the summary as HTML"
        )

    def build_report(self, document, options):
        """Return (report dict, Markdown summary)."""
        raise NotImplementedError

    def handle(self, *args, **options):
        overrides = {key: options.get(key) for key in ("depth", "prec", "bound")}
        try:
            document = parse_document(load_document(options["input"]), overrides)
            report, text = self.build_report(document, options)
        except ValidationError as exc:
            raise CommandError(
                "invalid input: " + "; ".join(exc.messages), returncode=1
            )
        except DrinfeldError as exc:
            logger.info(f"{type(exc).__name__}: {exc}")
            raise CommandError(
                f"{type(exc).__name__}: {exc}", returncode=exc.exit_code
            )

        report = {"command": self.command_name, **report}
        if "checks" in report:
            text += f"\n## Checks\n\n{checks_section(report['checks'])}\n"
        output = dumps(report)
        if options.get("json_path"):
            Path(options["json_path"]).write_text(output + "\n", encoding="utf-8")
        else:
            self.stdout.write(output)
        self.stdout.write(text)
        if options.get("html_path"):
            Path(options["html_path"]).write_text(to_html(text), encoding="utf-8")
        if options.get("verbosity", 1) >= 2:
            self.stderr.write(self.style.SUCCESS(f"{self.command_name} finished"))

    @property
    def command_name(self):
        return self.__module__.rsplit(".", 1)[-1]
