"""
Configuración ASGI del proyecto acciones_primas.

Expone la misma API que ``wsgi.py`` como el callable ``application`` para
servidores asíncronos (uvicorn, daphne).
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'acciones_primas.settings')

application = get_asgi_application()
