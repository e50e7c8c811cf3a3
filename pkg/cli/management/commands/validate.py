from cli.checks import module_checks
from cli.commands import DocumentCommand
from cli.serializers import module_report
from cli.summary import summary


class Command(DocumentCommand):
    help = "Validates a Drinfeld module of good reduction and reports its invariants"

    def build_report(self, document, options):
        report = module_report(document.spec)
        if options["verify"]:
            report["checks"] = module_checks(document.spec)
        text = summary(
            "Drinfeld module",
            {
                "psi_t": document.spec.phi_t,
                "reduction": document.spec.phibar_t,
                "rank r": report["r"],
                "w": report["w"],
                "pres": report["pres"],
                "height h": report["h"],
            },
        )
        return report, text
