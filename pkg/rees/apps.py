from django.apps import AppConfig


class ReesConfig(AppConfig):
    name = "rees"
    verbose_name = "Rees algebra classification"
