import numpy as np
import pytest

from bath import ExponentialExpansion, SpectralDensity, matsubara_expansion
from core.exceptions import ConfigError, NonFiniteObjective
from dynamics import AGKSL, HEOM, make_solver
from optimize.protocols import (IMP3, LINEAR, PIECEWISE_LINEAR, POLY3,
                                optimize_protocol, random_restarts)
from optimize.simplex import ObjectiveLog, OptimizerConfig, nelder_mead
from protocols import Imp3
from thermo.evaluator import WorkEvaluator

BETA = 1.0


def rosenbrock(x):
    return (1 - x[0]) ** 2 + 100 * (x[1] - x[0] ** 2) ** 2


class Test00Simplex:

    def test_00_quadratic(self):
        cfg = OptimizerConfig()
        result = nelder_mead(lambda x: np.sum((x - 1) ** 2), np.zeros(3), cfg)
        assert np.allclose(result.x, 1.0, atol=cfg.xatol), (
            'Минимум Σ(x − 1)² должен находиться в (1, 1, 1)'
        )
        assert result.converged

    def test_01_rosenbrock(self):
        result = nelder_mead(rosenbrock, [-1.2, 1.0], OptimizerConfig(),
                             max_iter=500)
        assert result.fun < 1e-6

    def test_02_deterministic(self):
        cfg = OptimizerConfig()
        first = nelder_mead(rosenbrock, [-1.2, 1.0], cfg, max_iter=50)
        second = nelder_mead(rosenbrock, [-1.2, 1.0], cfg, max_iter=50)
        assert len(first.evaluations) == len(second.evaluations)
        for (x1, f1), (x2, f2) in zip(first.evaluations, second.evaluations):
            assert np.array_equal(x1, x2) and f1 == f2, (
                'Повторный запуск должен давать тот же журнал вычислений'
            )

    def test_03_seed_is_first(self):
        result = nelder_mead(rosenbrock, [-1.2, 1.0], OptimizerConfig(),
                             max_iter=10)
        x0, f0 = result.evaluations[0]
        assert np.array_equal(x0, [-1.2, 1.0])
        assert result.fun <= f0

    def test_04_nan_objective(self):
        with pytest.raises(NonFiniteObjective) as info:
            nelder_mead(lambda x: np.nan, [0.5, 0.5], OptimizerConfig())
        assert np.array_equal(info.value.x, [0.5, 0.5])

    @pytest.mark.parametrize('kwargs', [
        {'xatol': 0.0}, {'fatol': -1.0}, {'max_iter': 0}, {'restarts': -1},
    ])
    def test_05_invalid_config(self, kwargs):
        with pytest.raises(ConfigError):
            OptimizerConfig(**kwargs)

    def test_06_initial_simplex(self):
        simplex = OptimizerConfig().initial_simplex([0.0, 10.0])
        assert np.allclose(simplex, [[0.0, 10.0], [0.1, 10.0], [0.0, 10.5]])

    def test_07_objective_cache(self):
        calls = []
        log = ObjectiveLog(lambda x: calls.append(1) or float(x.sum()))
        log([1.0, 2.0])
        log([1.0, 2.0])
        assert len(calls) == 1 and len(log.evaluations) == 1
        assert log.best[1] == 3.0

    def test_08_restarts_seeded(self):
        cfg = OptimizerConfig(restarts=2, seed=7)
        results = random_restarts(lambda x: float(np.sum(x ** 2)), 2, cfg,
                                  max_iter=5)
        assert [r.seed for r in results] == [7, 8]
        again = random_restarts(lambda x: float(np.sum(x ** 2)), 2, cfg,
                                max_iter=5)
        assert np.array_equal(results[0].evaluations[0][0],
                              again[0].evaluations[0][0])


class Test01Protocols:

    @pytest.fixture
    def frozen(self, tunable):
        solver = make_solver(HEOM, tunable,
                             ExponentialExpansion.decoupled(BETA),
                             SpectralDensity.drude(1.0, 0.0), BETA)
        return WorkEvaluator(solver)

    @pytest.fixture
    def markovian(self, driven):
        bath = SpectralDensity.drude(5.0, 0.2)
        solver = make_solver(AGKSL, driven, matsubara_expansion(bath, BETA, 4),
                             bath, BETA)
        return WorkEvaluator(solver)

    def test_00_linear(self, frozen):
        optimum = optimize_protocol(LINEAR, frozen, 0.1, OptimizerConfig())
        assert optimum.result is None
        assert optimum.report.W == pytest.approx(-0.5 * np.tanh(0.5))

    def test_01_flat_objective(self, frozen):
        cfg = OptimizerConfig()
        linear = optimize_protocol(LINEAR, frozen, 0.1, cfg)
        poly3 = optimize_protocol(POLY3, frozen, 0.1, cfg)
        assert poly3.report.W == pytest.approx(linear.report.W, abs=1e-10)
        assert poly3.protocol.kind == POLY3

    def test_02_unknown_kind(self, frozen):
        with pytest.raises(ConfigError):
            optimize_protocol('sigmoid', frozen, 0.1, OptimizerConfig())

    def test_03_imp3_improves_seed(self, markovian):
        cfg = OptimizerConfig(max_iter=20)
        optimum = optimize_protocol(IMP3, markovian, 0.5, cfg)
        assert optimum.report.W <= optimum.seed_work + 1e-12, (
            'Оптимум IMP3 не может быть хуже начального приближения'
        )
        assert isinstance(optimum.protocol, Imp3)
        summary = optimum.summary()
        assert summary['optimizer']['nfev'] == len(optimum.result.evaluations)

    def test_04_piecewise_from_seed(self, markovian):
        seed = Imp3(0.0, 1.0, 0.1, 5.0, 0.5, 0.3, 0.01)
        cfg = OptimizerConfig(max_iter=3, restarts=1, seed=3)
        optimum = optimize_protocol(PIECEWISE_LINEAR, markovian, 0.1, cfg,
                                    delta=0.01, seed_protocol=seed)
        assert len(optimum.protocol.values) == 11
        assert optimum.report.W <= optimum.seed_work + 1e-12
        assert optimum.restarts[0].seed == 3
        assert optimum.report.W <= optimum.restarts[0].fun + 1e-12
