from django import forms
from django.conf import settings
from django.core.exceptions import ValidationError
from django.db import models

from .characters import CharacterSpec, x_names
from .exceptions import OddSympError, PartitionError
from .identities import CHECKS, acceptance_grid
from .laurent import LaurentPoly
from .partitions import Partition
from .series import default_cap


class Family(models.TextChoices):
    SCHUR = "schur", "Schur polynomial s_lambda(x_1..x_n)"
    SP_EVEN = "sp_even", "Symplectic Sp_2n(lambda; x)"
    OSP = "osp", "Odd symplectic Sp_2n+1(lambda; x; z)"
    OSP_PROCTOR = "osp_proctor", "Odd symplectic at z = 1, in t_i with x_i = t_i^2"


def family_variables(family, n):
    if family == Family.OSP:
        return x_names(n) + ("z",)
    if family == Family.OSP_PROCTOR:
        return x_names(n, "t")
    return x_names(n)


def oddsymp_setting(key):
    return settings.ODDSYMP[key]


class PartitionField(forms.CharField):
    """Comma-separated parts; the empty string, "0" or "-" is the empty partition."""

    def __init__(self, **kwargs):
        kwargs.setdefault("required", False)
        super().__init__(**kwargs)

    def to_python(self, value):
        text = super().to_python(value)
        try:
            return Partition.parse(text)
        except PartitionError as exc:
            raise ValidationError(str(exc), code="invalid_partition")


class AssignmentsField(forms.Field):
    """var=value pairs; a value is an integer or a monomial such as q^2."""

    widget = forms.MultipleHiddenInput

    def to_python(self, value):
        if not value:
            return {}
        if isinstance(value, str):
            value = [value]
        assignments = {}
        for item in value:
            name, sep, text = str(item).partition("=")
            name, text = name.strip(), text.strip()
            if not sep or not name or not text:
                raise ValidationError(f"Expected var=value, got {item!r}", code="invalid_assignment")
            if name in assignments:
                raise ValidationError(f"{name} is assigned twice", code="invalid_assignment")
            assignments[name] = self._value(item, text)
        return assignments

    @staticmethod
    def _value(item, text):
        try:
            return int(text)
        except ValueError:
            pass
        try:
            value = LaurentPoly.parse(text)
        except OddSympError as exc:
            raise ValidationError(f"Cannot read {item!r}: {exc}", code="invalid_assignment")
        if not value.is_monomial():
            raise ValidationError(f"{item!r} assigns a non-monomial value", code="invalid_assignment")
        return value


class CharacterForm(forms.Form):
    family = forms.ChoiceField(choices=Family.choices)
    lam = PartitionField()
    n = forms.IntegerField(min_value=0)
    assignments = AssignmentsField(required=False)

    def clean(self):
        cleaned_data = super().clean()
        family, lam, n = cleaned_data.get("family"), cleaned_data.get("lam"), cleaned_data.get("n")
        if family is None or lam is None or n is None:
            return cleaned_data

        try:
            cleaned_data["spec"] = CharacterSpec(family, lam, n)
        except (OddSympError, ValueError) as exc:
            raise ValidationError(str(exc))

        known = family_variables(family, n)
        unknown = [name for name in cleaned_data.get("assignments") or {} if name not in known]
        if unknown:
            raise ValidationError(
                f"Unknown variable {unknown[0]!r}; {family} at n={n} uses {', '.join(known) or 'no variables'}"
            )
        return cleaned_data


class TableForm(forms.Form):
    family = forms.ChoiceField(choices=Family.choices)
    max_len = forms.IntegerField(min_value=0)
    max_part = forms.IntegerField(min_value=0)
    n = forms.IntegerField(min_value=0)
    jobs = forms.IntegerField(min_value=1, required=False)

    def clean(self):
        cleaned_data = super().clean()
        family, max_len, n = cleaned_data.get("family"), cleaned_data.get("max_len"), cleaned_data.get("n")
        if family is None or max_len is None or n is None:
            return cleaned_data

        bound = CharacterSpec.max_length(family, n)
        if max_len > bound:
            raise ValidationError(f"{family} at n={n} takes partitions of length at most {bound}, not {max_len}")
        if cleaned_data.get("jobs") is None:
            cleaned_data["jobs"] = 1
        return cleaned_data


class OracleForm(forms.Form):
    n = forms.IntegerField(min_value=0)
    degree = forms.IntegerField(min_value=0, required=False)

    def clean(self):
        cleaned_data = super().clean()
        if cleaned_data.get("n") is not None and cleaned_data.get("degree") is None:
            cleaned_data["degree"] = default_cap(cleaned_data["n"], oddsymp_setting("ORACLE_EXTRA_DEGREE"))
        return cleaned_data


class VerifyForm(forms.Form):
    ALL = "all"

    check = forms.ChoiceField(
        choices=[(name, check.description) for name, check in CHECKS.items()] + [(ALL, "full acceptance grid")]
    )
    n = forms.IntegerField(min_value=0, required=False)
    m = forms.IntegerField(min_value=1, required=False)
    r = forms.IntegerField(min_value=0, required=False)
    trials = forms.IntegerField(min_value=1, required=False)
    seed = forms.IntegerField(required=False)
    degree = forms.IntegerField(min_value=0, required=False)
    variant = forms.ChoiceField(
        choices=[("", "default"), ("difference", "1/(x_i - y_j)"), ("one_minus", "1/(1 - x_i y_j)")],
        required=False,
    )
    jobs = forms.IntegerField(min_value=1, required=False)

    PARAMS = ("n", "m", "r", "trials", "seed", "degree", "variant")

    def clean(self):
        cleaned_data = super().clean()
        name = cleaned_data.get("check")
        if name is None:
            return cleaned_data

        if cleaned_data.get("jobs") is None:
            cleaned_data["jobs"] = oddsymp_setting("JOBS")
        if cleaned_data.get("seed") is None:
            cleaned_data["seed"] = oddsymp_setting("DEFAULT_SEED")

        if name == self.ALL:
            cleaned_data["plan"] = acceptance_grid(
                seed=cleaned_data["seed"],
                trials=cleaned_data.get("trials") or oddsymp_setting("KEY_LEMMA_TRIALS"),
                cauchy_binet_trials=oddsymp_setting("CAUCHY_BINET_TRIALS"),
            )
            return cleaned_data

        check = CHECKS[name]
        params = {key: cleaned_data.get(key) for key in self.PARAMS}
        params["variant"] = params["variant"] or None
        if "seed" not in check.accepted:
            params["seed"] = None
        if "trials" in check.accepted and params["trials"] is None:
            params["trials"] = oddsymp_setting(
                "CAUCHY_BINET_TRIALS" if name == "cauchy-binet" else "KEY_LEMMA_TRIALS"
            )
        if "degree" in check.accepted and params["degree"] is None and params["n"] is not None:
            params["degree"] = default_cap(params["n"], oddsymp_setting("ORACLE_EXTRA_DEGREE"))
        try:
            check.bind(name, params)
        except ValueError as exc:
            raise ValidationError(str(exc))
        cleaned_data["plan"] = [(name, {key: value for key, value in params.items() if value is not None})]
        return cleaned_data
