from rest_framework import serializers

from apps.default.exceptions import AccionesError
from apps.groups.models import parse_group_spec


class GroupSpecField(serializers.CharField):
    """Descriptor de grupo en forma de texto (``D:7``, ``AM:q=5``...)."""

    def to_internal_value(self, data):
        text = super().to_internal_value(data)
        try:
            parse_group_spec(text)
        except AccionesError as exc:
            raise serializers.ValidationError(str(exc))
        return text


class GroupRequestSerializer(serializers.Serializer):
    group = GroupSpecField()


class IsomorphismRequestSerializer(serializers.Serializer):
    a = GroupSpecField()
    b = GroupSpecField()


class GeneratorSerializer(serializers.Serializer):
    name = serializers.CharField()
    element = serializers.IntegerField()
    order = serializers.IntegerField()


class GroupDescriptionSerializer(serializers.Serializer):
    group = serializers.CharField()
    order = serializers.IntegerField()
    exponent = serializers.IntegerField()
    abelian = serializers.BooleanField()
    generators = GeneratorSerializer(many=True)
    class_sizes = serializers.ListField(child=serializers.IntegerField())
    automorphisms = serializers.IntegerField()
