from rest_framework import serializers


class StrictFieldsMixin:
    """
    Запрещает ключи, для которых у сериализатора нет поля.
    """

    def to_internal_value(self, data):
        if isinstance(data, dict):
            unknown = sorted(set(data) - set(self.fields))
            if unknown:
                raise serializers.ValidationError(
                    {key: ['Неизвестный ключ.'] for key in unknown}
                )
        return super().to_internal_value(data)
