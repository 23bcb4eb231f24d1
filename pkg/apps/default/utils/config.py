from django.conf import settings


def get_setting(section, key=None, default=None):
    """
    Lee un valor de configuración del proyecto.

    ``section`` es el nombre de un diccionario de settings (p. ej. ``'SIEGEL_SOLVER'``)
    o de un valor simple cuando ``key`` es None. Si Django no está configurado
    se devuelve ``default``.
    """
    if not settings.configured:
        return default
    value = getattr(settings, section, None)
    if key is None:
        return default if value is None else value
    if not isinstance(value, dict):
        return default
    return value.get(key, default)
