from django.apps import AppConfig


class CliConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'knotlab.apps.cli'
    verbose_name = 'Batch Driver'

    def ready(self):
        """Import tasks so the worker registers them."""
        try:
            import knotlab.apps.cli.tasks  # noqa: F401
        except ImportError:
            pass
