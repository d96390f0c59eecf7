"""Glue between the request surfaces (commands, views) and the kernel."""

import io
import logging
from concurrent.futures import ProcessPoolExecutor
from html import escape

from reportlab.lib import colors
from reportlab.lib.pagesizes import A4, landscape
from reportlab.lib.styles import getSampleStyleSheet
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from .characters import CharacterSpec
from .laurent import VarTable
from .partitions import enumerate_bounded
from .series import oracle_characters

logger = logging.getLogger(__name__)


def form_errors(form):
    """Flatten form errors into one line per problem."""
    lines = []
    for field, errors in form.errors.items():
        prefix = "" if field == "__all__" else f"{field}: "
        lines.extend(f"{prefix}{error}" for error in errors)
    return "\n".join(lines)


def specialize(poly, assignments):
    """Apply var=value assignments all at once, so x1=x2 with x2=x1 swaps the two.

    An assigned variable leaves the table unless some value brings it back.
    """
    if not assignments:
        return poly
    # primed names cannot come out of the parser, so they never clash
    placeholders = {name: f"{name}'" for name in assignments if name in poly.table}
    result = poly.rename(placeholders).substitute_all(
        {placeholders[name]: value for name, value in assignments.items() if name in placeholders}
    )
    used = result.used_variables()
    names = [name for name in poly.table.names if name not in assignments or name in used]
    names += [name for name in used if name not in names]
    return result.rebase(VarTable.of(*names))


def character_payload(spec, poly, assignments=None):
    payload = {**poly.to_json(), **spec.metadata()}
    if assignments:
        payload["set"] = {name: str(value) for name, value in assignments.items()}
    return payload


def compute_character(spec, assignments=None):
    return specialize(spec.compute(), assignments)


def character_table(family, max_len, max_part, n, jobs=1):
    """(lambda, polynomial) for every partition in the max_len x max_part box."""
    specs = [CharacterSpec(family, lam, n) for lam in enumerate_bounded(max_len, max_part)]
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(CharacterSpec.compute, specs))
    else:
        values = [spec.compute() for spec in specs]
    return [(spec.lam, value) for spec, value in zip(specs, values)]


def oracle_table(n, degree):
    return sorted(oracle_characters(n, degree).items(), key=lambda item: (item[0].size(), item[0].parts))


def rows_payload(rows):
    return [{"lambda": lam.to_json(), "poly": poly.to_json()} for lam, poly in rows]


def rows_text(rows):
    width = max((len(str(lam)) for lam, _ in rows), default=0)
    return "\n".join(f"{str(lam).ljust(width)}  {poly}" for lam, poly in rows)


def generate_report_pdf_buffer(reports, title="Verification report"):
    buffer = io.BytesIO()
    doc = SimpleDocTemplate(
        buffer,
        pagesize=landscape(A4),
        rightMargin=40,
        leftMargin=40,
        topMargin=40,
        bottomMargin=50,
    )
    styles = getSampleStyleSheet()
    style_normal = styles["Normal"]

    elements = [Paragraph(escape(title), styles["Title"]), Spacer(1, 12)]
    table_data = [["Check", "Parameters", "Identity", "Status", "Seconds", "Detail"]]
    for report in reports:
        table_data.append([
            escape(report.check),
            Paragraph(escape(report.params_text()), style_normal),
            Paragraph(escape(report.identity), style_normal),
            report.status,
            f"{report.elapsed:.2f}",
            Paragraph(escape(report.detail), style_normal),
        ])

    report_table = Table(table_data, colWidths=[90, 110, 170, 50, 50, 290], repeatRows=1)
    style = [
        ("BACKGROUND", (0, 0), (-1, 0), colors.HexColor("#f4f6f9")),
        ("FONTNAME", (0, 0), (-1, 0), "Helvetica-Bold"),
        ("BOTTOMPADDING", (0, 0), (-1, 0), 8),
        ("TOPPADDING", (0, 0), (-1, 0), 8),
        ("GRID", (0, 0), (-1, -1), 1, colors.HexColor("#dee2e6")),
        ("VALIGN", (0, 0), (-1, -1), "TOP"),
    ]
    for row, report in enumerate(reports, start=1):
        colour = "#198754" if report.passed else "#dc3545"
        style.append(("TEXTCOLOR", (3, row), (3, row), colors.HexColor(colour)))
    report_table.setStyle(TableStyle(style))
    elements.append(report_table)

    doc.build(elements)
    buffer.seek(0)
    return buffer
