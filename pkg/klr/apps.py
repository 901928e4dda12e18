from django.apps import AppConfig


class KlrConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "klr"
    verbose_name = "KLR algebras of quivers with loops"
