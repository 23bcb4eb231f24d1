from apps.default.utils.rendering import render_table
from apps.jacobians.serializers.jacobian_serializer import DecompositionReportSerializer
from apps.surfaces.managers.pipeline import decomposition_reports, resolve_vectors
from apps.surfaces.utils.command import ReportCommand, parse_words

FACTOR_COLUMNS = ['irrep', 'n', 'dim_b', 'dim_a', 'schur']


class Command(ReportCommand):
    help = "Descompone la jacobiana de la acción dada en factores B_l^{n_l}"

    def add_arguments(self, parser):
        self.add_vector_arguments(parser)
        parser.add_argument('--subgroup', type=parse_words, help="Palabras que generan H, separadas por ';'")
        super().add_arguments(parser)

    def build(self, **options):
        vectors = resolve_vectors(
            options['group'], options['sigma'], options['images'], options['words'], options['all']
        )
        reports = decomposition_reports(vectors, options['subgroup'])
        return DecompositionReportSerializer(reports, many=True).data

    def table(self, data):
        blocks = []
        for report in data:
            vector = report['vector']
            title = f"{vector['group']} {vector['sigma']} {vector['images']}: {report['description']}"
            factors = [f for f in report['factors'] if not f['zero']]
            text = render_table(factors, FACTOR_COLUMNS, title)
            if 'quotient' in report:
                text += render_table(report['quotient'], ['irrep', 'n_h', 'dim'], "JS/H")
            blocks.append(text)
        return '\n'.join(blocks)
