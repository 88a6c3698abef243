from django.conf import settings
from rest_framework import serializers

from bath.spectral import DRUDE, KINDS as BATH_KINDS, OHMIC
from brownian import REGIMES, UNDERDAMPED
from dynamics import HEOM, METHODS
from optimize.models import SurveyRecord
from optimize.protocols import IMP3, KINDS as OPTIMIZE_KINDS
from protocols import IMPULSE_SHAPES
from system import DRIVEN, TUNABLE
from thermo.free_energy import MODES
from thermo.models import FreeEnergyRecord

from .mixins import StrictFieldsMixin

PROTOCOL_KINDS = ('constant', 'linear', 'imp3', 'poly3', 'piecewise_linear')
SECTIONS = ('system', 'bath', 'protocol', 'solver', 'optimizer', 'output',
            'trap', 'sweep')


def positive(value):
    if not value > 0:
        raise serializers.ValidationError('Значение должно быть больше 0.')


class SystemSerializer(StrictFieldsMixin, serializers.Serializer):
    """
    Секция [system].

    Поля:
    - kind: driven или tunable.
    - epsilon: Расщепление уровней ε.
    - lambda_i, lambda_f: Концы протокола; по умолчанию 0 → 1 для driven и
      1 → 2 для tunable.
    """
    kind = serializers.ChoiceField(choices=(DRIVEN, TUNABLE), default=DRIVEN)
    epsilon = serializers.FloatField(default=1.0, validators=(positive,))
    lambda_i = serializers.FloatField(required=False)
    lambda_f = serializers.FloatField(required=False)


class BathSerializer(StrictFieldsMixin, serializers.Serializer):
    """
    Секция [bath]: спектральная плотность и обратная температура.
    """
    kind = serializers.ChoiceField(choices=BATH_KINDS, default=DRUDE)
    gamma = serializers.FloatField(default=1.0, validators=(positive,))
    xi = serializers.FloatField(default=1.0, min_value=0.0)
    zeta = serializers.FloatField(default=0.0, min_value=0.0)
    beta = serializers.FloatField(default=1.0, validators=(positive,))


class ProtocolSerializer(StrictFieldsMixin, serializers.Serializer):
    """
    Секция [protocol].

    Поля:
    - kind: constant, linear, imp3, poly3 или piecewise_linear.
    - tau: Длительность.
    - h, alpha1, alpha2, alpha3: Параметры анзацев.
    - guess: Взять параметры IMP3 из начального приближения.
    - value: Значение постоянного протокола.
    - values: Узлы кусочно-линейного протокола.
    - delta, shape: Ширина и форма импульса.
    """
    kind = serializers.ChoiceField(choices=PROTOCOL_KINDS, default='linear')
    tau = serializers.FloatField(default=0.5, validators=(positive,))
    h = serializers.FloatField(default=0.0)
    alpha1 = serializers.FloatField(default=0.0)
    alpha2 = serializers.FloatField(default=0.0)
    alpha3 = serializers.FloatField(default=0.0)
    guess = serializers.BooleanField(default=False)
    value = serializers.FloatField(required=False)
    values = serializers.ListField(child=serializers.FloatField(),
                                   required=False)
    delta = serializers.FloatField(required=False, validators=(positive,))
    shape = serializers.ChoiceField(choices=IMPULSE_SHAPES, required=False)


class SolverSerializer(StrictFieldsMixin, serializers.Serializer):
    """
    Секция [solver]. Незаданные поля берутся из settings.WORKOPT.
    """
    method = serializers.ChoiceField(choices=METHODS, default=HEOM)
    dt = serializers.FloatField(required=False, validators=(positive,))
    depth = serializers.IntegerField(required=False, min_value=0)
    fit_tol = serializers.FloatField(required=False, validators=(positive,))
    k_max = serializers.IntegerField(required=False, min_value=1)
    fit_points = serializers.IntegerField(required=False, min_value=10)
    eq_tol = serializers.FloatField(required=False, validators=(positive,))
    eq_t_max = serializers.FloatField(required=False, validators=(positive,))
    deltaf_mode = serializers.ChoiceField(choices=MODES, required=False)
    deltaf_nodes = serializers.IntegerField(required=False, min_value=2)
    tau_q = serializers.FloatField(required=False, validators=(positive,))


class OptimizerSerializer(StrictFieldsMixin, serializers.Serializer):
    kind = serializers.ChoiceField(choices=OPTIMIZE_KINDS, default=IMP3)
    xatol = serializers.FloatField(required=False, validators=(positive,))
    fatol = serializers.FloatField(required=False, validators=(positive,))
    max_iter = serializers.IntegerField(required=False, min_value=1)
    restarts = serializers.IntegerField(default=0, min_value=0)
    simplex_scale = serializers.FloatField(required=False,
                                           validators=(positive,))
    simplex_min_step = serializers.FloatField(required=False,
                                              validators=(positive,))


class OutputSerializer(StrictFieldsMixin, serializers.Serializer):
    dir = serializers.CharField(default='results')


class TrapSerializer(StrictFieldsMixin, serializers.Serializer):
    """
    Секция [trap]: ловушка, ванна и шаг сетки δ_g.
    """
    regime = serializers.ChoiceField(choices=REGIMES, default=UNDERDAMPED)
    kind = serializers.ChoiceField(choices=BATH_KINDS, default=OHMIC)
    zeta = serializers.FloatField(default=1.0, min_value=0.0)
    gamma = serializers.FloatField(default=1.0, validators=(positive,))
    xi = serializers.FloatField(default=0.0, min_value=0.0)
    epsilon = serializers.FloatField(default=1.0, validators=(positive,))
    lambda_i = serializers.FloatField(default=0.0)
    lambda_f = serializers.FloatField(default=1.0)
    tau = serializers.FloatField(default=0.5, validators=(positive,))
    step = serializers.FloatField(default=5e-3, validators=(positive,))


class SweepSerializer(StrictFieldsMixin, serializers.Serializer):
    betas = serializers.ListField(child=serializers.FloatField(),
                                  default=[0.2, 1.0, 5.0], min_length=1)
    gammas = serializers.ListField(child=serializers.FloatField(),
                                   default=[0.2, 1.0, 5.0], min_length=1)
    xis = serializers.ListField(child=serializers.FloatField(),
                                default=[0.2, 1.0], min_length=1)
    taus = serializers.ListField(child=serializers.FloatField(),
                                 default=[0.5, 5.0, 15.0], min_length=1)
    kinds = serializers.ListField(
        child=serializers.ChoiceField(choices=OPTIMIZE_KINDS),
        default=list(OPTIMIZE_KINDS), min_length=1,
    )


class RunConfigSerializer(StrictFieldsMixin, serializers.Serializer):
    """
    Файл конфигурации расчета целиком.

    Отсутствующие секции заполняются значениями по умолчанию.
    """
    seed = serializers.IntegerField(required=False)
    system = SystemSerializer()
    bath = BathSerializer()
    protocol = ProtocolSerializer()
    solver = SolverSerializer()
    optimizer = OptimizerSerializer()
    output = OutputSerializer()
    trap = TrapSerializer()
    sweep = SweepSerializer()

    def to_internal_value(self, data):
        if isinstance(data, dict):
            data = {**{name: {} for name in SECTIONS}, **data}
        return super().to_internal_value(data)

    def validate(self, attrs):
        attrs.setdefault('seed', settings.WORKOPT['SEED'])
        return attrs


class VersionedSerializer(serializers.Serializer):
    schema_version = serializers.SerializerMethodField()

    def get_schema_version(self, obj):
        return settings.WORKOPT['SCHEMA_VERSION']


class WorkReportSerializer(VersionedSerializer):
    """
    Отчет о работе.

    Поля:
    - W: Работа.
    - dF: Разность свободных энергий.
    - W_ex: Избыточная работа.
    - margin: Запас второго начала W − ΔF.
    - method, protocol, metadata: Контекст расчета.
    """
    W = serializers.FloatField()
    dF = serializers.FloatField(source='delta_f')
    W_ex = serializers.FloatField(source='excess_work')
    margin = serializers.FloatField()
    method = serializers.CharField()
    protocol = serializers.DictField()
    metadata = serializers.DictField()


class TrapOptimumSerializer(VersionedSerializer):
    slope = serializers.FloatField()
    intercept = serializers.FloatField()
    end_value = serializers.FloatField()
    area = serializers.FloatField()
    W = serializers.FloatField(source='work')
    tau = serializers.FloatField()


class FreeEnergyRecordSerializer(serializers.ModelSerializer):
    dF = serializers.FloatField(source='value')
    schema_version = serializers.SerializerMethodField()

    class Meta:
        model = FreeEnergyRecord
        fields = ('schema_version', 'key', 'description', 'dF', 'created')

    def get_schema_version(self, obj):
        return settings.WORKOPT['SCHEMA_VERSION']


class SurveyRecordSerializer(serializers.ModelSerializer):
    W = serializers.FloatField(source='work', allow_null=True)
    W_ex = serializers.FloatField(source='excess_work', allow_null=True)
    schema_version = serializers.SerializerMethodField()

    class Meta:
        model = SurveyRecord
        fields = ('schema_version', 'survey', 'beta', 'gamma', 'xi', 'tau',
                  'kind', 'W', 'W_ex', 'status', 'error', 'parameters')

    def get_schema_version(self, obj):
        return settings.WORKOPT['SCHEMA_VERSION']
