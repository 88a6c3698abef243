from django.db import models

DONE = 'done'
FAILED = 'failed'
STATUSES = (
    (DONE, 'Готово'),
    (FAILED, 'Ошибка'),
)


class SurveyRecord(models.Model):
    """
    Ячейка обзора: оптимальная работа одного семейства протоколов при
    заданных параметрах ванны и длительности.
    """
    survey = models.CharField('Обзор', max_length=64, db_index=True)
    beta = models.FloatField('β')
    gamma = models.FloatField('γ')
    xi = models.FloatField('ξ')
    tau = models.FloatField('τ')
    kind = models.CharField('Семейство протоколов', max_length=32)
    work = models.FloatField('W', null=True, blank=True)
    excess_work = models.FloatField('W_ex', null=True, blank=True)
    status = models.CharField('Статус', max_length=16, choices=STATUSES)
    error = models.TextField('Ошибка', blank=True, default='')
    parameters = models.JSONField('Сводка', default=dict)
    updated = models.DateTimeField('Дата обновления', auto_now=True)

    class Meta:
        verbose_name = 'Ячейка обзора'
        verbose_name_plural = 'Ячейки обзора'
        ordering = ('survey', 'beta', 'gamma', 'xi', 'kind', 'tau')
        constraints = (
            models.UniqueConstraint(
                fields=('survey', 'beta', 'gamma', 'xi', 'tau', 'kind'),
                name='unique_survey_cell'
            ),
        )

    def __str__(self):
        return (f'{self.survey[:8]} β={self.beta:g} γ={self.gamma:g} '
                f'ξ={self.xi:g} τ={self.tau:g} {self.kind}: {self.status}')
