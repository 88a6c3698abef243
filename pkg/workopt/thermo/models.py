from django.db import models


class FreeEnergyRecord(models.Model):
    """
    Кэш разности свободных энергий.

    Ключ: sha256 канонического JSON описания системы, ванны, β, метода,
    шага и глубины иерархии.
    """
    key = models.CharField('Ключ', max_length=64, unique=True)
    description = models.JSONField('Описание расчета')
    value = models.FloatField('ΔF')
    created = models.DateTimeField('Дата расчета', auto_now=True)

    class Meta:
        verbose_name = 'Разность свободных энергий'
        verbose_name_plural = 'Разности свободных энергий'

    def __str__(self):
        return f'{self.key[:12]}: {self.value:.10g}'
