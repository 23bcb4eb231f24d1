from django.apps import AppConfig


class SiegelConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.siegel'
    verbose_name = 'Semiespacio de Siegel'
