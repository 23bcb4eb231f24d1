from rest_framework import serializers

from apps.cyclotomic.serializers.cycnum_serializer import CycNumField
from apps.groups.utils.structure import conjugacy_classes


class CharacterRowSerializer(serializers.Serializer):
    """Fila de la tabla: valores en los representantes de las clases de conjugación."""
    label = serializers.CharField(allow_blank=True)
    degree = serializers.IntegerField(min_value=1)
    values = serializers.ListField(child=CycNumField())

    def to_representation(self, instance):
        reps = [cls[0] for cls in conjugacy_classes(instance.group)]
        return {
            'label': instance.label,
            'degree': instance.degree,
            'values': [instance(g).text for g in reps],
        }


class RationalIrrepSerializer(serializers.Serializer):
    label = serializers.CharField()
    m = serializers.IntegerField(min_value=1)
    schur = serializers.IntegerField(min_value=1)
    d = serializers.IntegerField(min_value=1)
    n = serializers.IntegerField(min_value=1)
    constituents = serializers.ListField(child=serializers.CharField())

    def to_representation(self, instance):
        return {
            'label': instance.label,
            'm': instance.m,
            'schur': instance.schur,
            'd': instance.d,
            'n': instance.n,
            'constituents': [chi.label for chi in instance.constituents],
        }
