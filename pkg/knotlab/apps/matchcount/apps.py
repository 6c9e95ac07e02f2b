from django.apps import AppConfig


class MatchcountConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'knotlab.apps.matchcount'
    verbose_name = 'Configuration Pairing'
