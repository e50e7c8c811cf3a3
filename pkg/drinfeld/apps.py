from django.apps import AppConfig


class DrinfeldConfig(AppConfig):
    name = "drinfeld"
    verbose_name = "Drinfeld modules"
