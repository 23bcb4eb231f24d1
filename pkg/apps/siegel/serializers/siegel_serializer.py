import numpy as np
from rest_framework import serializers


class ComplexMatrixField(serializers.Field):
    """Matriz compleja como lista de filas de pares [re, im]."""

    def to_representation(self, value):
        matrix = np.asarray(value, dtype=np.complex128)
        return [[[float(v.real), float(v.imag)] for v in row] for row in matrix]

    def to_internal_value(self, data):
        try:
            matrix = np.array([[complex(re, im) for re, im in row] for row in data], dtype=np.complex128)
        except (TypeError, ValueError):
            raise serializers.ValidationError("Se espera una lista de filas de pares [re, im]")
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise serializers.ValidationError("La matriz debe ser cuadrada")
        return matrix


class SymplecticGeneratorSerializer(serializers.Serializer):
    name = serializers.CharField(allow_blank=True)
    entries = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))


class FixedPointReportSerializer(serializers.Serializer):
    generators = SymplecticGeneratorSerializer(many=True)
    solution = ComplexMatrixField(source='solution.matrix')
    residuals = serializers.ListField(child=serializers.FloatField(min_value=0))
    k = serializers.SerializerMethodField()
    locus_dimension = serializers.IntegerField(min_value=0)
    tangent_basis = serializers.ListField(child=ComplexMatrixField(), required=False)
    starts = serializers.IntegerField(min_value=1)
    converged_starts = serializers.IntegerField(min_value=0)
    seed = serializers.IntegerField()
    convention = serializers.ChoiceField(choices=['right', 'left', 'none'])
    relations = serializers.DictField(child=serializers.BooleanField(), required=False)
    min_imag_eigenvalue = serializers.FloatField(source='solution.min_imag_eigenvalue', read_only=True)
    symmetry_defect = serializers.FloatField(source='solution.symmetry_defect', read_only=True)

    def get_k(self, instance):
        k = instance.k
        return None if k is None else [k.real, k.imag]
