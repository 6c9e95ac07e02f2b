from django.apps import AppConfig


class LinkcodeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'knotlab.apps.linkcode'
    verbose_name = 'Link Codes'
