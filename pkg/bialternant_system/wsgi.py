"""
WSGI entry point for the bialternant API; run_waitress.py serves it.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "bialternant_system.settings")

application = get_wsgi_application()
