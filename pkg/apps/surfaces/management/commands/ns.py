from apps.default.utils.rendering import render_table
from apps.jacobians.serializers.jacobian_serializer import NsReportSerializer
from apps.surfaces.managers.pipeline import ns_reports, resolve_vectors
from apps.surfaces.utils.command import ReportCommand

COLUMNS = ['images', 'n', 'sym_sum_direct', 'sym_sum_conjugate_path', 'minus_one_in_group']


class Command(ReportCommand):
    help = "Dimensión N del lugar fijado en el semiespacio de Siegel"

    def add_arguments(self, parser):
        self.add_vector_arguments(parser)
        super().add_arguments(parser)

    def build(self, **options):
        vectors = resolve_vectors(
            options['group'], options['sigma'], options['images'], options['words'], options['all']
        )
        return NsReportSerializer(ns_reports(vectors), many=True).data

    def table(self, data):
        rows = [dict(report, images=report['vector']['images']) for report in data]
        title = "{group} {sigma}".format(**data[0]["vector"]) if data else None
        return render_table(rows, COLUMNS, title)
