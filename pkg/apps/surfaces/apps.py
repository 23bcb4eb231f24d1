from django.apps import AppConfig


class SurfacesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.surfaces'
    verbose_name = 'Superficies de género q - 1'
