from apps.default.utils.rendering import render_pairs
from apps.surfaces.serializers.surface_serializer import CurveModelSerializer
from apps.surfaces.utils.curve_models import ALIASES, TAGS, curve_model
from apps.surfaces.utils.command import ReportCommand


class Command(ReportCommand):
    help = "Ecuación plana y automorfismos de una de las familias de la clasificación"

    def add_arguments(self, parser):
        parser.add_argument('tag', choices=TAGS + tuple(ALIASES))
        parser.add_argument('--q', type=int, required=True)
        super().add_arguments(parser)

    def build(self, **options):
        return CurveModelSerializer(curve_model(options['tag'], options['q'])).data

    def table(self, data):
        return render_pairs(data, f"{data['tag']} (q = {data['q']})")
