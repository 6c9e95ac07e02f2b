from django.apps import AppConfig


class HomflyConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'knotlab.apps.homfly'
    verbose_name = 'HOMFLY Oracle'
