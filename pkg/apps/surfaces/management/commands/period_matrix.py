from apps.default.utils.rendering import render_pairs, render_table
from apps.siegel.managers.period_matrix import accola_maclachlan_period_matrix
from apps.siegel.serializers.siegel_serializer import FixedPointReportSerializer
from apps.surfaces.utils.command import ReportCommand

SUMMARY = ['k', 'locus_dimension', 'convention', 'starts', 'converged_starts', 'seed',
           'min_imag_eigenvalue', 'symmetry_defect', 'relations']


class Command(ReportCommand):
    help = "Matriz de periodos de la curva de Accola-Maclachlan de género 4"

    def add_arguments(self, parser):
        parser.add_argument('--seed', type=int, help="Semilla de los arranques de Newton")
        parser.add_argument('--starts', type=int, help="Número de arranques de Newton")
        super().add_arguments(parser)

    def build(self, **options):
        report = accola_maclachlan_period_matrix(seed=options['seed'], starts=options['starts'])
        return FixedPointReportSerializer(report).data

    def table(self, data):
        summary = {key: data[key] for key in SUMMARY}
        summary['max_residual'] = max(data['residuals'])
        rows = [
            {'fila': i + 1, 'Z': ['{:.12g}{:+.12g}i'.format(re, im) for re, im in row]}
            for i, row in enumerate(data['solution'])
        ]
        return render_pairs(summary, "Punto fijo en H_4") + render_table(rows, ['fila', 'Z'])
