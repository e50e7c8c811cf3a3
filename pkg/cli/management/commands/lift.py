from cli.checks import lift_checks
from cli.commands import DocumentCommand, lift_parameters
from cli.serializers import bounds_report, ore_poly, tau_series
from cli.summary import summary, table
from drinfeld.lift import canonical_lift, check_endomorphism, commutes, lift_bounds
from ore.tau_series import series_inverse


class Command(DocumentCommand):
    help = "Computes the canonical lift x with psi_t x = x phibar_t"

    def build_report(self, document, options):
        spec = document.spec
        depth, prec = lift_parameters(document)
        x = canonical_lift(spec, depth, prec)
        report = {
            "depth": depth,
            "prec": prec,
            "x": tau_series(x),
            "commutes": commutes(spec, x),
        }
        inverse = None
        if options["verify"]:
            inverse = series_inverse(x, prec=prec)
            report["inverse"] = tau_series(inverse)
            report["endomorphisms"] = [
                {"h": ore_poly(h), **check_endomorphism(spec, x, h)}
                for h in document.endomorphisms
            ]
            report["checks"] = lift_checks(spec, x, inverse, document.endomorphisms)
        report["bounds"] = bounds_report(lift_bounds(spec, x, inverse))

        rows = [(j, c) for j, c in report["x"].items()]
        text = summary(
            "Canonical lift",
            {"psi_t": spec.phi_t, "depth J": depth, "precision N": prec},
            [("Coefficients x_j", table(("j", "x_j"), rows))],
        )
        return report, text
