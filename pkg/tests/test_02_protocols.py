import numpy as np
import pytest
from scipy.integrate import trapezoid

from bath import SpectralDensity
from core.exceptions import DegenerateAnsatz, GridMismatch, InvalidAnsatz
from protocols import (TRIANGLE, Constant, HeightScale, Imp3, Linear,
                       PiecewiseLinear, Poly3, evaluate, imp3_initial_guess,
                       normalized, reparam_height, sample_on_grid, steps_per,
                       time_grid)


class Test00Grid:

    def test_00_time_grid(self):
        times = time_grid(0.5, 1e-3)
        assert len(times) == 501
        assert times[0] == 0.0 and times[-1] == 0.5, (
            'Концы сетки должны совпадать с 0 и τ точно'
        )

    def test_01_mismatch(self):
        with pytest.raises(GridMismatch):
            time_grid(0.5, 0.003)
        with pytest.raises(GridMismatch):
            steps_per(0.01, 0.004)
        with pytest.raises(GridMismatch):
            steps_per(1.0, 0.0)

    def test_02_delta_must_divide(self):
        p = Imp3(0.0, 1.0, 0.5, 1.0, 0.4, 0.4, delta=0.01)
        with pytest.raises(GridMismatch):
            sample_on_grid(p, 0.004)


class Test01Ansatz:

    def test_00_outside_values(self):
        p = Poly3(0.0, 1.0, 2.0, 0.3, -0.2, 0.1)
        assert evaluate(p, -1.0) == 0.0, 'До начала λ = λ_i'
        assert evaluate(p, 3.0) == 1.0, 'После окончания λ = λ_f'

    def test_01_linear(self):
        p = Linear(1.0, 2.0, 4.0)
        assert p(1.0) == pytest.approx(1.25)
        assert p.parameters().size == 0

    def test_02_constant(self):
        p = Constant.of(0.3, 1.0)
        assert np.allclose(p(np.linspace(-1, 2, 7)), 0.3)

    def test_03_poly3_endpoints(self):
        p = Poly3(0.0, 1.0, 0.5, 3.0, -2.0, 1.0)
        assert p.interior(np.array(0.0)) == pytest.approx(0.0)
        assert p.interior(np.array(0.5)) == pytest.approx(1.0), (
            'Внутренняя ветвь POLY3 должна соединять λ_i и λ_f'
        )

    def test_04_imp3_sawtooth(self):
        h, alpha1, alpha2, delta = 5.0, 0.4, 0.3, 0.01
        p = Imp3(0.0, 1.0, 0.5, h, alpha1, alpha2, delta)
        assert p(0.0) == pytest.approx(alpha2 + 2 * h), (
            'Импульс sawtooth начинается с прямой + 2h'
        )
        assert p(delta) == pytest.approx(alpha1 * delta + alpha2)
        assert p(0.25) == pytest.approx(alpha1 * 0.25 + alpha2)
        t = np.linspace(0.0, delta, 2001)
        area = trapezoid(p(t) - (alpha1 * t + alpha2), t)
        assert area == pytest.approx(h * delta, rel=1e-6), (
            'Площадь импульса должна быть h·δ'
        )
        tail = np.linspace(0.5 - delta, 0.5, 2001)
        tail_area = trapezoid(p(tail) - (alpha1 * tail + alpha2), tail)
        assert tail_area == pytest.approx(-h * delta, rel=1e-6), (
            'Конечный импульс должен быть зеркальным'
        )

    def test_05_imp3_triangle(self):
        p = Imp3(0.0, 1.0, 0.5, 5.0, 0.0, 0.0, 0.01, TRIANGLE)
        assert p(0.005) == pytest.approx(10.0), 'Вершина треугольника 2h'
        assert p(0.0) == pytest.approx(0.0)

    def test_06_imp3_too_short(self):
        with pytest.raises(InvalidAnsatz):
            Imp3(0.0, 1.0, 0.015, 1.0, 0.0, 0.0, 0.01)
        with pytest.raises(InvalidAnsatz):
            Imp3(0.0, 1.0, 0.5, 1.0, 0.0, 0.0, 0.01, 'gauss')

    def test_07_with_parameters(self):
        p = Imp3(0.0, 1.0, 0.5, 1.0, 0.2, 0.3)
        q = p.with_parameters([2.0, 0.5, 0.6])
        assert np.allclose(q.parameters(), [2.0, 0.5, 0.6])
        assert q.delta == p.delta and q.tau == p.tau
        assert p.describe()['h'] == 1.0

    def test_08_piecewise_from_imp3(self):
        p = Imp3(0.0, 1.0, 0.5, 40.0, 0.4, 0.4, 0.01)
        pw = PiecewiseLinear.from_protocol(p, 0.01)
        assert len(pw.values) == 51
        times, values = sample_on_grid(p, 1e-3)
        assert np.allclose(pw(times), values), (
            'Кусочно-линейный протокол на узлах δ воспроизводит sawtooth IMP3'
        )

    def test_09_piecewise_node_count(self):
        with pytest.raises(InvalidAnsatz):
            PiecewiseLinear(0.0, 1.0, 0.5, (0.0, 1.0), 0.01)

    def test_10_normalized(self):
        p = Imp3(0.0, 1.0, 0.5, 40.0, 0.4, 0.4, 0.01)
        times, _ = sample_on_grid(p, 1e-3)
        values, scale = normalized(p, times)
        assert scale == pytest.approx(80.4)
        assert np.max(np.abs(values)) == pytest.approx(1.0)


class Test02Guess:

    def test_00_driven(self, driven):
        bath = SpectralDensity.ohmic(1.0)
        guess = imp3_initial_guess(driven, bath, 1.0, 0.5, 0.01)
        assert guess.alpha1 == pytest.approx(0.4)
        assert guess.alpha2 == pytest.approx(0.4)
        assert guess.h == pytest.approx(40.0)
        assert reparam_height(guess.h, guess.alpha2, 0.0, 0.01) == \
            pytest.approx(1.0), 'Нормированная высота h′ должна быть 1'

    def test_01_tunable(self, tunable):
        bath = SpectralDensity.drude(5.0, 0.2)
        beta = 5.0
        guess = imp3_initial_guess(tunable, bath, beta, 5.0, 0.01)
        zeta = 2 * bath(1.0)
        beta_eff = 2 * np.tanh(0.5 * beta)
        rate = 2 * zeta / beta_eff
        assert guess.h == 0.0, 'Для tunable импульсы не начинаются с h ≠ 0'
        assert guess.alpha1 == pytest.approx(rate / (2 + rate * 5.0))
        assert guess.alpha2 == pytest.approx(1.0 + 1.0 / (2 + rate * 5.0))

    def test_02_decoupled(self, driven):
        with pytest.raises(DegenerateAnsatz):
            imp3_initial_guess(driven, SpectralDensity.drude(1.0, 0.0), 1.0,
                               0.5, 0.01)

    def test_03_height_scale(self):
        scale = HeightScale.from_parameters(0.4, 0.0, 0.01)
        x = scale.to_normalized([40.0, 0.4, 0.4])
        assert np.allclose(x, [1.0, 0.4, 0.4])
        assert np.allclose(scale.to_height(x), [40.0, 0.4, 0.4])
        with pytest.raises(DegenerateAnsatz):
            HeightScale.from_parameters(0.0, 0.0, 0.01)
