import json
import logging

from django.core.management.base import BaseCommand, CommandError

from ..exceptions import NotDivisible, OddSympError
from ..services import form_errors

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
VERIFICATION_FAILED = 1
# inexact division inside a determinant ratio
KERNEL_ERROR = 3


class FormCommand(BaseCommand):
    """A command whose options are validated by a Django form before any computation."""

    form_class = None
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("--json", action="store_true", dest="as_json", help="Write JSON instead of text.")

    def form_data(self, options):
        raise NotImplementedError

    def run(self, cleaned_data, as_json):
        raise NotImplementedError

    def handle(self, *args, **options):
        form = self.form_class(data=self.form_data(options))
        if not form.is_valid():
            raise CommandError(form_errors(form), returncode=USAGE_ERROR)
        try:
            self.run(form.cleaned_data, options["as_json"])
        except NotDivisible as exc:
            logger.exception("Exact division failed in %s", self.__module__)
            raise CommandError(f"Internal error, please report: {exc}", returncode=KERNEL_ERROR)
        except (OddSympError, ValueError) as exc:
            raise CommandError(f"{type(exc).__name__}: {exc}", returncode=USAGE_ERROR)

    def write_json(self, payload):
        self.stdout.write(json.dumps(payload, indent=2))
