from django.core.management.base import CommandError

from ...forms import VerifyForm
from ...identities import CHECKS, run_checks
from ...reports import summary_table
from ..base import VERIFICATION_FAILED, FormCommand


class Command(FormCommand):
    help = "Run an identity check (or `all` for the full acceptance grid); exits 1 if any check fails."
    form_class = VerifyForm

    def add_arguments(self, parser):
        parser.add_argument("check", choices=[*CHECKS, VerifyForm.ALL])
        for flag in ("n", "m", "r", "trials", "seed", "degree"):
            parser.add_argument(f"--{flag}", type=int)
        parser.add_argument("--variant", choices=["difference", "one_minus"])
        parser.add_argument("--jobs", type=int, help="Worker processes for `all` (default: logical cores).")
        super().add_arguments(parser)

    def form_data(self, options):
        return {key: options[key] for key in ("check", *VerifyForm.PARAMS, "jobs")}

    def run(self, cleaned_data, as_json):
        reports = run_checks(cleaned_data["plan"], jobs=cleaned_data["jobs"])
        if as_json:
            payload = [report.to_dict() for report in reports]
            self.write_json(payload if cleaned_data["check"] == VerifyForm.ALL else payload[0])
        else:
            self.stdout.write(summary_table(reports))

        failed = [report for report in reports if not report.passed]
        if failed:
            raise CommandError(
                f"{len(failed)} of {len(reports)} check(s) failed: {', '.join(r.check for r in failed)}",
                returncode=VERIFICATION_FAILED,
            )
