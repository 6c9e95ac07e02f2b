import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'knotlab.core.settings')
django.setup()
