"""
Salida de los comandos: JSON determinista o tabla de texto plano.
"""
import json

FORMATS = ('json', 'table')


def _plain(value):
    """Convierte las estructuras de DRF (ReturnDict, OrderedDict...) en tipos base."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def render_json(data):
    return json.dumps(_plain(data), sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def _cell(value):
    if isinstance(value, (list, tuple)):
        return ', '.join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ' '.join(f"{k}={_cell(v)}" for k, v in sorted(value.items()))
    if value is None:
        return '-'
    return str(value)


def render_table(rows, columns, title=None):
    """
    Tabla alineada a la izquierda. ``rows`` es una lista de diccionarios y
    ``columns`` los nombres de las columnas en orden.
    """
    cells = [[_cell(row.get(column)) for column in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = [title] if title else []
    lines.append('  '.join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    lines.append('  '.join('-' * w for w in widths))
    lines += ['  '.join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return '\n'.join(lines) + '\n'


def render_pairs(data, title=None):
    """Tabla de dos columnas clave / valor para informes sin filas."""
    rows = [{'campo': key, 'valor': value} for key, value in sorted(_plain(data).items())]
    return render_table(rows, ['campo', 'valor'], title)
