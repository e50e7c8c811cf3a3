from django.apps import AppConfig


class OreConfig(AppConfig):
    name = "ore"
    verbose_name = "Twisted polynomials"
