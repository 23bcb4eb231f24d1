from rest_framework import serializers

from apps.vectors.serializers.vector_serializer import GeneratingVectorSerializer


class MultiplicitySerializer(serializers.Serializer):
    label = serializers.CharField()
    mu = serializers.IntegerField(min_value=0)

    def to_representation(self, instance):
        label, mu = instance
        return {'label': label, 'mu': mu}


class IsogenyFactorSerializer(serializers.Serializer):
    irrep = serializers.CharField()
    n = serializers.IntegerField(min_value=1)
    dim_b = serializers.IntegerField(min_value=0)
    dim_a = serializers.IntegerField(min_value=0)
    m = serializers.IntegerField(min_value=1)
    d = serializers.IntegerField(min_value=1)
    schur = serializers.IntegerField(min_value=1)
    zero = serializers.BooleanField()


class DecompositionReportSerializer(serializers.Serializer):
    """
    Informe completo de una acción: ρ_a, factores B_l^{n_l} y, si se pidió
    un subgrupo, los exponentes n_l^H de la jacobiana del cociente.
    """
    vector = GeneratingVectorSerializer()
    genus = serializers.IntegerField(min_value=2)
    analytic = MultiplicitySerializer(many=True)
    factors = IsogenyFactorSerializer(many=True)
    description = serializers.CharField()
    quotient = serializers.ListField(child=serializers.DictField(), required=False)

    def to_representation(self, instance):
        analytic, decomposition, quotient = instance
        data = {
            'vector': GeneratingVectorSerializer(decomposition.vector).data,
            'genus': decomposition.genus,
            'analytic': MultiplicitySerializer(
                [(label, mu) for label, mu in analytic.multiplicities if mu], many=True
            ).data,
            'factors': IsogenyFactorSerializer(decomposition.factors, many=True).data,
            'description': decomposition.describe(),
        }
        if quotient is not None:
            data['quotient'] = [
                {'irrep': factor.irrep, 'n_h': n_h, 'dim': n_h * factor.dim_b} for factor, n_h in quotient
            ]
        return data


class NsReportSerializer(serializers.Serializer):
    vector = GeneratingVectorSerializer()
    n = serializers.IntegerField(min_value=0)
    sym_sum_direct = serializers.CharField()
    sym_sum_conjugate_path = serializers.CharField()
    minus_one_in_group = serializers.BooleanField()
    subgroup_order = serializers.IntegerField(min_value=1)

    def to_representation(self, instance):
        return {
            'vector': GeneratingVectorSerializer(instance.vector).data,
            'n': instance.n,
            'sym_sum_direct': str(instance.sym_sum_direct),
            'sym_sum_conjugate_path': str(instance.sym_sum_conjugate_path),
            'minus_one_in_group': instance.minus_one_in_group,
            'subgroup_order': instance.subgroup_order,
        }
