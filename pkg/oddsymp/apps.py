from django.apps import AppConfig


class OddsympConfig(AppConfig):
    name = "oddsymp"
    verbose_name = "Odd symplectic characters"
