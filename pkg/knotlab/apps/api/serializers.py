"""
Serializers for the knotlab HTTP API.
"""
from rest_framework import serializers

from knotlab.apps.linkcode.codes import parse_link
from knotlab.core.errors import InputError


class LinkCodeSerializer(serializers.Serializer):
    """A link code in SGC v1 text, one component per line."""

    code = serializers.CharField(trim_whitespace=False, allow_blank=True)

    def validate_code(self, value):
        """Parse the code; the validated value is the LinkCode."""
        try:
            return parse_link(value)
        except InputError as exc:
            raise serializers.ValidationError(str(exc), code=type(exc).__name__) from exc
