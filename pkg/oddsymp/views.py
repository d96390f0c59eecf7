import logging

from django.http import HttpResponse, JsonResponse
from django.views.generic import View

from .exceptions import NotDivisible, OddSympError
from .forms import CharacterForm, OracleForm, TableForm, VerifyForm
from .identities import run_checks
from .services import (
    character_payload,
    character_table,
    compute_character,
    generate_report_pdf_buffer,
    oracle_table,
    rows_payload,
)

logger = logging.getLogger(__name__)


class FormView(View):
    """GET parameters go through a form; kernel and argument errors become 400 responses."""

    form_class = None

    def form_data(self, request, **kwargs):
        return request.GET

    def get(self, request, **kwargs):
        form = self.form_class(data=self.form_data(request, **kwargs))
        if not form.is_valid():
            return JsonResponse({"errors": form.errors.get_json_data()}, status=400)
        try:
            return self.respond(form.cleaned_data)
        except NotDivisible as e:
            logger.exception("%s hit an inexact division", type(self).__name__)
            return JsonResponse({"errors": {"__all__": [{"message": f"Internal error: {e}", "code": "internal"}]}}, status=500)
        except (OddSympError, ValueError) as e:
            logger.warning("%s failed: %s", type(self).__name__, e)
            return JsonResponse({"errors": {"__all__": [{"message": f"{type(e).__name__}: {e}", "code": "kernel"}]}}, status=400)

    def respond(self, cleaned_data):
        raise NotImplementedError


class CharacterView(FormView):
    form_class = CharacterForm

    def form_data(self, request, **kwargs):
        return {
            "family": request.GET.get("family"),
            "lam": request.GET.get("lambda", ""),
            "n": request.GET.get("n"),
            "assignments": request.GET.getlist("set"),
        }

    def respond(self, cleaned_data):
        spec, assignments = cleaned_data["spec"], cleaned_data["assignments"]
        poly = compute_character(spec, assignments)
        payload = character_payload(spec, poly, assignments)
        payload["text"] = str(poly)
        return JsonResponse(payload)


class TableView(FormView):
    form_class = TableForm

    def respond(self, cleaned_data):
        rows = character_table(
            cleaned_data["family"], cleaned_data["max_len"], cleaned_data["max_part"], cleaned_data["n"]
        )
        return JsonResponse(rows_payload(rows), safe=False)


class OracleView(FormView):
    form_class = OracleForm

    def respond(self, cleaned_data):
        rows = oracle_table(cleaned_data["n"], cleaned_data["degree"])
        return JsonResponse(rows_payload(rows), safe=False)


class VerifyView(FormView):
    form_class = VerifyForm

    def form_data(self, request, check):
        data = request.GET.copy()
        data["check"] = check
        # requests are served one check at a time
        data["jobs"] = "1"
        return data

    def reports(self, cleaned_data):
        return run_checks(cleaned_data["plan"], jobs=cleaned_data["jobs"])

    def respond(self, cleaned_data):
        reports = self.reports(cleaned_data)
        passed = all(report.passed for report in reports)
        payload = [report.to_dict() for report in reports]
        if cleaned_data["check"] != VerifyForm.ALL:
            payload = payload[0]
        return JsonResponse(payload, safe=False, status=200 if passed else 422)


class VerifyPDFView(VerifyView):
    def respond(self, cleaned_data):
        reports = self.reports(cleaned_data)
        try:
            buffer = generate_report_pdf_buffer(reports, title=f"Verification: {cleaned_data['check']}")
        except Exception as e:
            logger.exception("PDF rendering failed")
            return HttpResponse(f"Error generating PDF: {e}", status=500)

        response = HttpResponse(buffer, content_type="application/pdf")
        response["Content-Disposition"] = f'attachment; filename="{cleaned_data["check"]}.pdf"'
        return response
