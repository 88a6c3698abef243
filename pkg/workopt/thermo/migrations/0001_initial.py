# Generated by Django 4.2.11 on 2024-05-14 10:21

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='FreeEnergyRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('key', models.CharField(max_length=64, unique=True, verbose_name='Ключ')),
                ('description', models.JSONField(verbose_name='Описание расчета')),
                ('value', models.FloatField(verbose_name='ΔF')),
                ('created', models.DateTimeField(auto_now=True, verbose_name='Дата расчета')),
            ],
            options={
                'verbose_name': 'Разность свободных энергий',
                'verbose_name_plural': 'Разности свободных энергий',
            },
        ),
    ]
