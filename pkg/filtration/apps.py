from django.apps import AppConfig


class FiltrationConfig(AppConfig):
    name = "filtration"
    verbose_name = "Principal classes"
