"""
WSGI entry point serving the quadratic form API (``python manage.py runserver``
and any WSGI server pointed at ``qfsite.wsgi:application``).
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "qfsite.settings")

application = get_wsgi_application()
