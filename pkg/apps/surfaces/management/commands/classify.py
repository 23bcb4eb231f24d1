from apps.default.utils.rendering import render_table
from apps.surfaces.managers.classifier import classify
from apps.surfaces.serializers.surface_serializer import ClassificationReportSerializer
from apps.surfaces.utils.command import ReportCommand

COLUMNS = ['lam', 'group', 'sigma', 'orbit_count', 'extendable_count', 'iso_class_count', 'stratum']


class Command(ReportCommand):
    help = "Clasifica las superficies de género q - 1 con grupo de automorfismos de orden λq"

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int, required=True)
        super().add_arguments(parser)

    def build(self, **options):
        return ClassificationReportSerializer(classify(options['q'])).data

    def table(self, data):
        lambdas = ', '.join(str(lam) for lam in data['realizable_lambdas'])
        title = f"q = {data['q']}, género {data['genus']}, λ realizables: {lambdas}"
        strata = ' '.join(f"{tag}:{count}" for tag, count in data['strata'].items())
        return render_table(data['pairs'], COLUMNS, title) + f"estratos: {strata}\n"
