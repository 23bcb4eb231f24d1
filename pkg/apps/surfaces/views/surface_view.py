from rest_framework import status, viewsets
from rest_framework.decorators import action
from rest_framework.response import Response
from drf_yasg.utils import swagger_auto_schema

from apps.default.exceptions import AccionesError
from apps.jacobians.serializers.jacobian_serializer import DecompositionReportSerializer, NsReportSerializer
from apps.siegel.managers.period_matrix import accola_maclachlan_period_matrix
from apps.siegel.serializers.siegel_serializer import FixedPointReportSerializer
from apps.surfaces.managers.classifier import classify
from apps.surfaces.managers.pipeline import decomposition_reports, ns_reports, resolve_vectors
from apps.surfaces.serializers.surface_serializer import (
    ClassificationReportSerializer,
    ClassifyRequestSerializer,
    CurveModelRequestSerializer,
    CurveModelSerializer,
    DecomposeRequestSerializer,
    PeriodMatrixRequestSerializer,
)
from apps.surfaces.utils.curve_models import curve_model
from apps.vectors.serializers.vector_serializer import VectorRequestSerializer


def _vectors(data):
    return resolve_vectors(
        data['group'], data['sigma'], data.get('images') or None, data.get('words') or None, data['all']
    )


class SurfaceViewSet(viewsets.GenericViewSet):
    """
    ViewSet de las superficies de género q - 1: clasificación, descomposición
    de la jacobiana, dimensión N, modelos algebraicos y matriz de periodos.
    """
    serializer_class = ClassifyRequestSerializer

    def get_queryset(self):
        return []

    def _run(self, request_serializer, compute):
        serializer = request_serializer(data=self.request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        try:
            return Response(compute(serializer.validated_data))
        except AccionesError as e:
            return Response(e.as_response_data(), status=e.http_status)

    @swagger_auto_schema(
        operation_description="Clasifica las acciones de grupos de orden λq en género q - 1",
        request_body=ClassifyRequestSerializer,
        responses={
            200: ClassificationReportSerializer,
            400: "q no es primo o está fuera del rango configurado"
        }
    )
    @action(detail=False, methods=['post'])
    def classify(self, request):
        """
        Clasificación para un primo q.

        Request:
        {
            "q": "integer - Primo entre CLASSIFY.MIN_Q y CLASSIFY.MAX_Q"
        }
        """
        return self._run(
            ClassifyRequestSerializer,
            lambda data: ClassificationReportSerializer(classify(data['q'])).data
        )

    @swagger_auto_schema(
        operation_description="Descompone la jacobiana de una acción o de todas las órbitas",
        request_body=DecomposeRequestSerializer,
        responses={
            200: DecompositionReportSerializer(many=True),
            400: "Grupo, signatura o vector inválidos",
            422: "Familia sin tabla de caracteres o γ ≠ 0"
        }
    )
    @action(detail=False, methods=['post'])
    def decompose(self, request):
        """
        Request:
        {
            "group": "string - Descriptor del grupo",
            "sigma": "string - Signatura (0;k1,...,ks)",
            "images": "list[int] - Opcional",
            "words": "list[str] - Opcional",
            "all": "boolean - Un representante por órbita",
            "subgroup": "list[str] - Opcional, generadores de H"
        }
        """
        def compute(data):
            reports = decomposition_reports(_vectors(data), data.get('subgroup'))
            return DecompositionReportSerializer(reports, many=True).data
        return self._run(DecomposeRequestSerializer, compute)

    @swagger_auto_schema(
        operation_description="Dimensión N del lugar fijado por la imagen simpléctica del grupo",
        request_body=VectorRequestSerializer,
        responses={200: NsReportSerializer(many=True), 400: "Entrada inválida"}
    )
    @action(detail=False, methods=['post'])
    def ns(self, request):
        return self._run(
            VectorRequestSerializer,
            lambda data: NsReportSerializer(ns_reports(_vectors(data)), many=True).data
        )

    @swagger_auto_schema(
        operation_description="Ecuación plana y automorfismos de una familia",
        request_body=CurveModelRequestSerializer,
        responses={200: CurveModelSerializer, 400: "Etiqueta o q inválidos"}
    )
    @action(detail=False, methods=['post'])
    def curve_model(self, request):
        return self._run(
            CurveModelRequestSerializer,
            lambda data: CurveModelSerializer(curve_model(data['tag'], data['q'])).data
        )

    @swagger_auto_schema(
        operation_description="Matriz de periodos de la curva de Accola-Maclachlan de género 4",
        request_body=PeriodMatrixRequestSerializer,
        responses={
            200: FixedPointReportSerializer,
            500: "Newton no converge o falla una relación cerrada"
        }
    )
    @action(detail=False, methods=['post'])
    def period_matrix(self, request):
        return self._run(
            PeriodMatrixRequestSerializer,
            lambda data: FixedPointReportSerializer(
                accola_maclachlan_period_matrix(seed=data.get('seed'), starts=data.get('starts'))
            ).data
        )
