from django.apps import AppConfig


class WeightcheckConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'knotlab.apps.weightcheck'
    verbose_name = 'su(N) Weight Check'
