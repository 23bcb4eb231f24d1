from rest_framework import status, viewsets
from rest_framework.decorators import action
from rest_framework.response import Response
from drf_yasg.utils import swagger_auto_schema
from drf_yasg import openapi

from apps.default.exceptions import AccionesError
from apps.groups.managers.group_builder import build_group
from apps.groups.serializers.group_serializer import (
    GroupDescriptionSerializer,
    GroupRequestSerializer,
    IsomorphismRequestSerializer,
)
from apps.groups.utils.isomorphism import are_isomorphic, automorphisms
from apps.groups.utils.structure import conjugacy_classes


def describe_group(group):
    """Resumen serializable de un grupo."""
    return {
        'group': group.spec_tag,
        'order': group.order,
        'exponent': group.exponent,
        'abelian': group.is_abelian,
        'generators': [
            {'name': name, 'element': g, 'order': group.orders[g]} for name, g in group.generators
        ],
        'class_sizes': [len(c) for c in conjugacy_classes(group)],
        'automorphisms': len(automorphisms(group)),
    }


class GroupViewSet(viewsets.GenericViewSet):
    """
    ViewSet de consulta de los grupos finitos de la biblioteca.
    """
    serializer_class = GroupRequestSerializer

    def get_queryset(self):
        return []

    @swagger_auto_schema(
        operation_description="Describe un grupo: orden, generadores, clases y automorfismos",
        request_body=GroupRequestSerializer,
        responses={
            200: GroupDescriptionSerializer,
            400: "Descriptor inválido",
            422: "Grupo fuera de los límites de búsqueda exhaustiva"
        }
    )
    @action(detail=False, methods=['post'])
    def describe(self, request):
        """
        Describe un grupo.

        Request:
        {
            "group": "string - Descriptor del grupo, p. ej. 'D:5' o 'AM:q=5'"
        }

        Errores:
        - 400: Descriptor inválido
        - 422: Orden mayor que el límite configurado
        """
        serializer = GroupRequestSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        try:
            groups = build_group(serializer.validated_data['group'])
            if isinstance(groups, tuple):
                data = [describe_group(g) for g in groups]
                return Response(GroupDescriptionSerializer(data, many=True).data)
            return Response(GroupDescriptionSerializer(describe_group(groups)).data)
        except AccionesError as e:
            return Response(e.as_response_data(), status=e.http_status)

    @swagger_auto_schema(
        operation_description="Decide si dos grupos son isomorfos",
        request_body=IsomorphismRequestSerializer,
        responses={
            200: openapi.Response(
                description="Resultado del test",
                examples={"application/json": {"a": "D10", "b": "D5xC2", "isomorphic": True}}
            ),
            400: "Descriptor inválido"
        }
    )
    @action(detail=False, methods=['post'])
    def isomorphic(self, request):
        serializer = IsomorphismRequestSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        try:
            a = build_group(serializer.validated_data['a'])
            b = build_group(serializer.validated_data['b'])
            if isinstance(a, tuple) or isinstance(b, tuple):
                return Response(
                    {'error': "Use descriptores de un solo grupo", 'code': 'INVALID_INPUT'},
                    status=status.HTTP_400_BAD_REQUEST
                )
            return Response({'a': a.spec_tag, 'b': b.spec_tag, 'isomorphic': are_isomorphic(a, b)})
        except AccionesError as e:
            return Response(e.as_response_data(), status=e.http_status)
