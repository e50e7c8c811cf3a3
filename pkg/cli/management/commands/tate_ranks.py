from cli.checks import tate_checks
from cli.commands import DocumentCommand
from cli.summary import summary
from drinfeld.modules import tate_rank_table


class Command(DocumentCommand):
    help = "Reports the ranks of the Tate modules of the analytic quotient"

    def build_report(self, document, options):
        rank_M = document.lattice.declared_rank if document.has_lattice else 0
        table = tate_rank_table(document.spec, rank_M)
        report = table.as_dict()
        if options["verify"]:
            report["checks"] = tate_checks(table, rank_M)
        text = summary(
            "Tate module ranks",
            {
                "r_phi": table.r_phi,
                "rank at pres": table.rank_at("pres"),
                "rank elsewhere": table.r_phi,
                "rule": table.rule,
            },
        )
        return report, text
