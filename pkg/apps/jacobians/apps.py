from django.apps import AppConfig


class JacobiansConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.jacobians'
    verbose_name = 'Descomposición de jacobianas'
