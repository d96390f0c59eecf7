from ...forms import CharacterForm, Family
from ...services import character_payload, compute_character
from ..base import FormCommand


class Command(FormCommand):
    help = "Compute one character by its bialternant formula, e.g. `char osp --lambda 1 --n 1 --set z=1`."
    form_class = CharacterForm

    def add_arguments(self, parser):
        parser.add_argument("family", choices=Family.values)
        parser.add_argument("--lambda", dest="lam", default="", help="Comma-separated parts; empty for the empty partition.")
        parser.add_argument("--n", type=int, required=True, help="Rank (number of x-variables).")
        parser.add_argument(
            "--set", action="append", dest="assignments", default=[], metavar="VAR=VALUE",
            help="Specialise a variable to an integer or a monomial (repeatable).",
        )
        super().add_arguments(parser)

    def form_data(self, options):
        return {
            "family": options["family"],
            "lam": options["lam"],
            "n": options["n"],
            "assignments": options["assignments"],
        }

    def run(self, cleaned_data, as_json):
        spec, assignments = cleaned_data["spec"], cleaned_data["assignments"]
        poly = compute_character(spec, assignments)
        if as_json:
            self.write_json(character_payload(spec, poly, assignments))
        else:
            self.stdout.write(str(poly))
