import warnings

from django.core.exceptions import ValidationError

from cli.checks import quotient_checks
from cli.commands import DocumentCommand
from cli.serializers import quotient_report
from cli.summary import summary
from core.exceptions import CancellationWarning
from uniformizer.exponential import analytic_quotient


class Command(DocumentCommand):
    help = "Computes the analytic quotient phi of psi by the lattice truncated at B"

    def build_report(self, document, options):
        if document.bound is None:
            raise ValidationError("uniformize needs --bound or params.bound")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", CancellationWarning)
            result = analytic_quotient(
                document.spec, document.lattice, document.bound, document.prec
            )
        report = quotient_report(result)
        if options["verify"]:
            samples = list(document.lattice)
            if document.element is not None:
                samples.append(document.element)
            report["checks"] = quotient_checks(document.spec, result, samples)
        text = summary(
            "Analytic quotient",
            {
                "bound B": report["bound"],
                "dim M_B": report["lattice_dimension"],
                "phi_t": result.phi_t,
                "residual valuation": report["residual_valuation"],
                "certified": report["certified"],
            },
        )
        return report, text
