from django.apps import AppConfig


class CyclotomicConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.cyclotomic'
    verbose_name = 'Cuerpos ciclotómicos'
