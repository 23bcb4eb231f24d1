from rest_framework import serializers

from apps.default.exceptions import AccionesError
from apps.signatures.models import Signature


class SignatureField(serializers.CharField):
    """Signatura en forma de texto ``(g;k1,...,ks)``."""

    def to_internal_value(self, data):
        text = super().to_internal_value(data)
        try:
            return Signature.parse(text).text
        except AccionesError as exc:
            raise serializers.ValidationError(str(exc))


class GroupScreenSerializer(serializers.Serializer):
    name = serializers.CharField()
    signatures = serializers.ListField(child=SignatureField())

    def to_representation(self, instance):
        return {'name': instance.name, 'signatures': [s.text for s in instance.signatures]}


class LambdaVerdictSerializer(serializers.Serializer):
    lam = serializers.IntegerField(min_value=1)
    examined = GroupScreenSerializer(many=True)
    realizable = serializers.ListField(child=serializers.DictField(child=serializers.CharField()))


class FeasibilityReportSerializer(serializers.Serializer):
    q = serializers.IntegerField(min_value=2)
    genus = serializers.IntegerField()
    realizable_lambdas = serializers.ListField(child=serializers.IntegerField())
    verdicts = LambdaVerdictSerializer(many=True)

    def to_representation(self, instance):
        verdicts = [
            {
                'lam': lam,
                'examined': GroupScreenSerializer(instance.examined.get(lam, ()), many=True).data,
                'realizable': [
                    {'group': pair.name, 'sigma': pair.signature.text} for pair in instance.pairs(lam)
                ],
            }
            for lam in sorted(instance.verdicts)
        ]
        return {
            'q': instance.q,
            'genus': instance.genus,
            'realizable_lambdas': list(instance.realizable_lambdas),
            'verdicts': verdicts,
        }
