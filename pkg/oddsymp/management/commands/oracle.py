from ...forms import OracleForm
from ...services import oracle_table, rows_payload, rows_text
from ..base import FormCommand


class Command(FormCommand):
    help = "Dump the odd symplectic characters read off the truncated Cauchy kernel."
    form_class = OracleForm

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--degree", type=int, help="Total u-degree cap (default n(n+1)/2 + 4).")
        super().add_arguments(parser)

    def form_data(self, options):
        return {"n": options["n"], "degree": options["degree"]}

    def run(self, cleaned_data, as_json):
        rows = oracle_table(cleaned_data["n"], cleaned_data["degree"])
        if as_json:
            self.write_json(rows_payload(rows))
        else:
            self.stdout.write(rows_text(rows))
