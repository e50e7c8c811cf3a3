"""
Human-readable summaries: Markdown on stdout, optionally rendered to HTML.
"""

import markdown


def table(header, rows):
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(str(value) for value in row) + " |")
    return "\n".join(lines)


def summary(title, quantities, sections=()):
    """A heading, a quantity/value table and further (heading, body) sections."""
    parts = [f"# {title}", table(("quantity", "value"), quantities.items())]
    for heading, body in sections:
        parts.append(f"## {heading}")
        parts.append(body)
    return "\n\n".join(parts) + "\n"


def filtration_section(report):
    rows = [(row.i, row.rank, row.classification) for row in report.filtration]
    return table(("i", "rank", "classification"), rows)


def checks_section(checks):
    rows = [(name, "pass" if passed else "FAIL") for name, passed in checks.items()]
    return table(("check", "result"), rows)


def to_html(text):
    return markdown.markdown(
        text,
        extensions=[
            "markdown.extensions.tables",
            "markdown.extensions.fenced_code",
        ],
    )
