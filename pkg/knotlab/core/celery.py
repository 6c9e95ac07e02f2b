"""
Celery configuration for the knotlab project.

Verification runs dispatch one task per diagram. With the default
``CELERY_TASK_ALWAYS_EAGER=True`` the tasks execute in process.
"""
import os
from celery import Celery
from django.conf import settings

# Set default Django settings module
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'knotlab.core.settings')

app = Celery('knotlab')

# Load config from Django settings with CELERY namespace
app.config_from_object('django.conf:settings', namespace='CELERY')

# Auto-discover tasks from all registered Django apps
app.autodiscover_tasks(lambda: settings.INSTALLED_APPS)
