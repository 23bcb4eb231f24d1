from rest_framework import serializers

from apps.cyclotomic.models import CycNum
from apps.default.exceptions import AccionesError


class CycNumField(serializers.Field):
    """Valor ciclotómico exacto en su forma de texto ``cyc(n)[c0,c1,...]``."""

    def to_representation(self, value):
        return value.text

    def to_internal_value(self, data):
        if not isinstance(data, str):
            raise serializers.ValidationError("Se espera un texto 'cyc(n)[...]'")
        try:
            return CycNum.parse(data)
        except AccionesError as exc:
            raise serializers.ValidationError(str(exc))
