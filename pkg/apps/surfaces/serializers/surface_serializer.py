from rest_framework import serializers

from apps.signatures.serializers.signature_serializer import SignatureField
from apps.surfaces.utils.curve_models import ALIASES, TAGS
from apps.vectors.serializers.vector_serializer import VectorRequestSerializer


class PairRowSerializer(serializers.Serializer):
    lam = serializers.IntegerField(min_value=1)
    group = serializers.CharField()
    spec = serializers.CharField()
    sigma = SignatureField()
    orbit_count = serializers.IntegerField(min_value=0)
    extendable_count = serializers.IntegerField(min_value=0)
    iso_class_count = serializers.IntegerField(min_value=0)
    stratum = serializers.CharField(allow_null=True)

    def to_representation(self, instance):
        report = instance.report
        return {
            'lam': instance.lam,
            'group': instance.name,
            'spec': report.group.spec_tag,
            'sigma': report.signature.text,
            'orbit_count': report.orbit_count,
            'extendable_count': report.extendable_count,
            'iso_class_count': report.iso_class_count,
            'stratum': instance.stratum,
        }


class ClassificationReportSerializer(serializers.Serializer):
    """
    Resumen de la clasificación para un primo q: λ realizables, un renglón
    por par (grupo, signatura) y el número de estratos por familia.
    """
    q = serializers.IntegerField(min_value=2)
    genus = serializers.IntegerField()
    realizable_lambdas = serializers.ListField(child=serializers.IntegerField(min_value=1))
    pairs = PairRowSerializer(many=True)
    strata = serializers.DictField(child=serializers.IntegerField(min_value=1))

    def to_representation(self, instance):
        return {
            'q': instance.q,
            'genus': instance.genus,
            'realizable_lambdas': list(instance.realizable_lambdas),
            'pairs': PairRowSerializer(instance.pairs, many=True).data,
            'strata': dict(instance.strata),
        }


class CurveParameterSerializer(serializers.Serializer):
    name = serializers.CharField()
    domain = serializers.CharField()

    def to_representation(self, instance):
        name, domain = instance
        return {'name': name, 'domain': domain}


class CurveModelSerializer(serializers.Serializer):
    tag = serializers.ChoiceField(choices=TAGS)
    q = serializers.IntegerField(min_value=5)
    genus = serializers.IntegerField(read_only=True)
    equation = serializers.CharField()
    automorphisms = serializers.ListField(child=serializers.CharField())
    group = serializers.CharField()
    parameters = CurveParameterSerializer(many=True, required=False)
    rho = serializers.IntegerField(allow_null=True, required=False)
    is_family = serializers.BooleanField(read_only=True)


class ClassifyRequestSerializer(serializers.Serializer):
    q = serializers.IntegerField(min_value=2)


class DecomposeRequestSerializer(VectorRequestSerializer):
    subgroup = serializers.ListField(
        child=serializers.CharField(), required=False,
        help_text="Palabras que generan el subgrupo H para los exponentes de JS/H"
    )


class CurveModelRequestSerializer(serializers.Serializer):
    tag = serializers.ChoiceField(choices=TAGS + tuple(ALIASES))
    q = serializers.IntegerField(min_value=5)


class PeriodMatrixRequestSerializer(serializers.Serializer):
    seed = serializers.IntegerField(required=False)
    starts = serializers.IntegerField(min_value=1, max_value=1024, required=False)
