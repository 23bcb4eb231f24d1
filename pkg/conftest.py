import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'acciones_primas.settings')
django.setup()
