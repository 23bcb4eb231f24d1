from rest_framework import serializers

from apps.groups.serializers.group_serializer import GroupSpecField
from apps.signatures.serializers.signature_serializer import SignatureField


class GeneratingVectorSerializer(serializers.Serializer):
    group = serializers.CharField(source='group.spec_tag')
    sigma = SignatureField(source='signature.text')
    periods = serializers.ListField(child=serializers.IntegerField(min_value=2))
    images = serializers.ListField(child=serializers.IntegerField(min_value=0))


class VectorRequestSerializer(serializers.Serializer):
    """
    Acción a estudiar: un vector concreto (por índices o por palabras) o
    todas las órbitas de la signatura.
    """
    group = GroupSpecField()
    sigma = SignatureField()
    images = serializers.ListField(child=serializers.IntegerField(min_value=0), required=False)
    words = serializers.ListField(child=serializers.CharField(), required=False)
    all = serializers.BooleanField(default=False)

    def validate(self, attrs):
        given = [bool(attrs.get('images')), bool(attrs.get('words')), attrs['all']]
        if sum(given) != 1:
            raise serializers.ValidationError("Indique exactamente uno de 'images', 'words' o 'all'")
        return attrs


class ExtensionStepSerializer(serializers.Serializer):
    recipe = serializers.CharField()
    ambient = serializers.CharField(source='ambient_name')
    sigma = serializers.CharField(source='ambient_signature.text')
    vector = GeneratingVectorSerializer(source='ambient_vector')
    label = serializers.CharField(allow_null=True, required=False)


class OrbitSerializer(serializers.Serializer):
    representative = GeneratingVectorSerializer()
    size = serializers.IntegerField(min_value=1)
    extendable = serializers.BooleanField()
    extension = ExtensionStepSerializer(source='extension.steps', many=True, allow_null=True, required=False)
    specializations = ExtensionStepSerializer(many=True, required=False)


class OrbitReportSerializer(serializers.Serializer):
    group = serializers.CharField(source='group.spec_tag')
    sigma = SignatureField(source='signature.text')
    total = serializers.IntegerField(min_value=0)
    orbit_count = serializers.IntegerField(min_value=0)
    extendable_count = serializers.IntegerField(min_value=0)
    iso_class_count = serializers.IntegerField(min_value=0)
    merged = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    orbits = OrbitSerializer(many=True)
