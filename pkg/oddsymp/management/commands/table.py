from ...forms import Family, TableForm
from ...services import character_table, rows_payload, rows_text
from ..base import FormCommand


class Command(FormCommand):
    help = "Tabulate a character family over every partition in a max_len x max_part box."
    form_class = TableForm

    def add_arguments(self, parser):
        parser.add_argument("family", choices=Family.values)
        parser.add_argument("--max-len", type=int, required=True)
        parser.add_argument("--max-part", type=int, required=True)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--jobs", type=int, help="Worker processes, one character per task.")
        super().add_arguments(parser)

    def form_data(self, options):
        return {key: options[key] for key in ("family", "max_len", "max_part", "n", "jobs")}

    def run(self, cleaned_data, as_json):
        rows = character_table(
            cleaned_data["family"],
            cleaned_data["max_len"],
            cleaned_data["max_part"],
            cleaned_data["n"],
            jobs=cleaned_data["jobs"],
        )
        if as_json:
            self.write_json(rows_payload(rows))
        else:
            self.stdout.write(rows_text(rows))
