from django.core.exceptions import ValidationError

from cli.checks import chi_checks
from cli.commands import DocumentCommand, lift_parameters
from cli.serializers import principal_class
from cli.summary import summary
from kummer.chi import chi_inverse_class


class Command(DocumentCommand):
    help = "Transports the class of the document's element through chi^-1"

    def build_report(self, document, options):
        if document.element is None:
            raise ValidationError("chi_inv needs an element block")
        spec, xi = document.spec, document.element
        depth, prec = lift_parameters(document)
        eta = chi_inverse_class(spec, xi, depth, prec)
        report = {
            "element": str(xi),
            "depth": depth,
            "prec": prec,
            "class": principal_class(eta),
            "j_invariant": None if eta.is_zero() else eta.j_invariant(),
            "w_level": eta.w_level(),
        }
        if options["verify"]:
            report["checks"] = chi_checks(spec, xi, eta, depth, prec)
        text = summary(
            "chi^-1",
            {
                "xi": xi,
                "class": eta,
                "j": report["j_invariant"],
                "least i with the class in W_i": report["w_level"],
            },
        )
        return report, text
