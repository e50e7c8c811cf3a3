from django.apps import AppConfig


class KummerConfig(AppConfig):
    name = "kummer"
    verbose_name = "Inertia images"
