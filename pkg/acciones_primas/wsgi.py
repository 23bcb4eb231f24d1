"""
Configuración WSGI del proyecto acciones_primas.

Expone la API de cálculo (clasificación, descomposiciones, matriz de periodos)
como el callable ``application``.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'acciones_primas.settings')

application = get_wsgi_application()
