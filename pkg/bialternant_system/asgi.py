"""
ASGI entry point for the bialternant API, for servers such as uvicorn.
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "bialternant_system.settings")

application = get_asgi_application()
