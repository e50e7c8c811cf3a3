from django.apps import AppConfig


class UniformizerConfig(AppConfig):
    name = "uniformizer"
    verbose_name = "Tate uniformization"
