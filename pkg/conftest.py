import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "bialternant_system.settings")
django.setup()
