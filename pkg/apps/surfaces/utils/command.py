"""
Base de los comandos de gestión: opciones comunes de salida y traducción de
los errores de cálculo a códigos de salida.
"""
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from apps.default.exceptions import AccionesError, InvalidInputError
from apps.default.utils.rendering import FORMATS, render_json

logger = logging.getLogger(__name__)


def parse_images(text):
    """``"3,1,4"`` -> (3, 1, 4)."""
    try:
        return tuple(int(part) for part in text.split(',') if part.strip())
    except ValueError:
        raise InvalidInputError(f"Imágenes mal formadas: {text!r}")


def parse_words(text):
    """``"z;z*x;x^-1"`` -> ['z', 'z*x', 'x^-1']."""
    return [word.strip() for word in text.split(';') if word.strip()]


class ReportCommand(BaseCommand):
    """
    Los comandos concretos implementan ``build(**options)``, que devuelve los
    datos serializados, y ``table(data)``, su versión en texto plano.
    """

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=FORMATS, default='table')
        parser.add_argument('--out', help="Fichero de salida; por defecto stdout")

    def add_vector_arguments(self, parser):
        parser.add_argument('--group', required=True, help="Descriptor del grupo, p. ej. 'AM:q=5'")
        parser.add_argument('--sigma', required=True, help="Signatura, p. ej. '(0;2,4,10)'")
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--images', type=parse_images, help="Índices de las imágenes, separados por comas")
        source.add_argument('--words', type=parse_words, help="Palabras en los generadores, separadas por ';'")
        source.add_argument('--all', action='store_true', help="Un representante por órbita")

    def build(self, **options):
        raise NotImplementedError

    def table(self, data):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            data = self.build(**options)
        except AccionesError as e:
            logger.error("%s: %s", e.code, e)
            raise CommandError(f"{e.code}: {e}", returncode=e.exit_code)
        text = render_json(data) if options['format'] == 'json' else self.table(data)
        if options.get('out'):
            Path(options['out']).write_text(text, encoding='utf-8')
            logger.info("Informe escrito en %s", options['out'])
        else:
            self.stdout.write(text, ending='')
