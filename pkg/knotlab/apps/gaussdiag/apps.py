from django.apps import AppConfig


class GaussdiagConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'knotlab.apps.gaussdiag'
    verbose_name = 'Gauss Diagrams'
