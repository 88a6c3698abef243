# Generated by Django 4.2.11 on 2024-05-14 10:21

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SurveyRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('survey', models.CharField(db_index=True, max_length=64, verbose_name='Обзор')),
                ('beta', models.FloatField(verbose_name='β')),
                ('gamma', models.FloatField(verbose_name='γ')),
                ('xi', models.FloatField(verbose_name='ξ')),
                ('tau', models.FloatField(verbose_name='τ')),
                ('kind', models.CharField(max_length=32, verbose_name='Семейство протоколов')),
                ('work', models.FloatField(blank=True, null=True, verbose_name='W')),
                ('excess_work', models.FloatField(blank=True, null=True, verbose_name='W_ex')),
                ('status', models.CharField(choices=[('done', 'Готово'), ('failed', 'Ошибка')], max_length=16, verbose_name='Статус')),
                ('error', models.TextField(blank=True, default='', verbose_name='Ошибка')),
                ('parameters', models.JSONField(default=dict, verbose_name='Сводка')),
                ('updated', models.DateTimeField(auto_now=True, verbose_name='Дата обновления')),
            ],
            options={
                'verbose_name': 'Ячейка обзора',
                'verbose_name_plural': 'Ячейки обзора',
                'ordering': ('survey', 'beta', 'gamma', 'xi', 'kind', 'tau'),
            },
        ),
        migrations.AddConstraint(
            model_name='surveyrecord',
            constraint=models.UniqueConstraint(fields=('survey', 'beta', 'gamma', 'xi', 'tau', 'kind'), name='unique_survey_cell'),
        ),
    ]
