from tqdm import tqdm

from cli.checks import inertia_checks
from cli.commands import DocumentCommand
from cli.serializers import inertia_report as serialize
from cli.summary import filtration_section, summary
from kummer.reports import inertia_report


class Command(DocumentCommand):
    help = "Computes the inertia image report for the document's lattice"

    def build_report(self, document, options):
        progress = None
        if options.get("verbosity", 1) >= 2:

            def progress(generators):
                return tqdm(generators, desc="chi^-1 of generators")

        report = inertia_report(
            document.spec,
            document.lattice,
            progress=progress,
            depth=document.depth,
            prec=document.prec,
        )
        data = serialize(report)
        if options["verify"]:
            data["checks"] = inertia_checks(
                document.spec,
                document.lattice,
                report,
                depth=document.depth,
                prec=document.prec,
            )
        text = summary(
            "Inertia image",
            {
                "breaks S": report.S,
                "rank_R(Mbar)": report.rank_R,
                "conductor": report.conductor,
                "image rank over A_p": report.image_rank,
                "open": report.open,
                "declared rank": report.declared_rank,
            },
            [("Filtration", filtration_section(report))],
        )
        return data, text
