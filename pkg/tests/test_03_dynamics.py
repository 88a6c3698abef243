from math import comb

import numpy as np
import pytest
import scipy.sparse as sp
from scipy.linalg import expm

from bath import ExponentialExpansion, SpectralDensity, matsubara_expansion
from core.exceptions import ConfigError, EquilibrationError
from dynamics import (AGKSL, HEOM, TCL2, HierarchyIndex, HierarchyState,
                      Tcl2State, UnitPropagator, agksl_rhs, equilibrate,
                      heom_generator, heom_rhs, make_solver, propagate,
                      rk4_step, stationary_aux, steady_state, tcl2_rhs)
from protocols import Linear
from system import SIGMA_X, gibbs_state, hamiltonian, trace_distance

from .common import hermiticity_error, trace_error

BETA = 1.0


@pytest.fixture
def expansion(drude):
    return matsubara_expansion(drude, BETA, 1)


def random_blocks(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.normal(size=(n, 2, 2)) + 1j * rng.normal(size=(n, 2, 2))


class Test00Hierarchy:

    @pytest.mark.parametrize('K,depth', [(1, 3), (3, 4), (4, 6), (0, 4)])
    def test_00_block_count(self, K, depth):
        index = HierarchyIndex(K, depth)
        assert index.n_blocks == comb(depth + K, K), (
            'Число блоков иерархии должно быть C(D_H + K, K)'
        )
        assert index.offsets[(0,) * K] == 0, 'ρ_S должен быть первым блоком'

    def test_01_neighbours(self):
        index = HierarchyIndex(2, 3)
        i = index.offsets[(1, 1)]
        assert index.lower[i, 0] == index.offsets[(0, 1)]
        assert index.upper[i, 1] == index.offsets[(1, 2)]
        top = index.offsets[(0, 3)]
        assert index.upper[top, 1] == -1, 'Выше D_H соседей нет'

    def test_02_generator_matches_rhs(self, driven, expansion):
        index = HierarchyIndex(expansion.K, 3)
        H = hamiltonian(driven, 0.4)
        state = HierarchyState(index, random_blocks(index.n_blocks))
        generator = heom_generator(index, H, SIGMA_X, expansion)
        direct = heom_rhs(state, H, SIGMA_X, expansion).flat()
        assert np.allclose(generator @ state.flat(), direct), (
            'Разреженная матрица HEOM должна совпадать с правой частью'
        )

    def test_03_trace_preserved(self, driven, expansion):
        index = HierarchyIndex(expansion.K, 3)
        state = HierarchyState(index, random_blocks(index.n_blocks, 1))
        drho = heom_rhs(state, hamiltonian(driven, 0.4), SIGMA_X,
                        expansion).rho
        assert abs(np.trace(drho)) < 1e-12, 'tr ρ̇_S должен быть равен нулю'


class Test01Tcl2AndAgksl:

    def test_00_tcl2_trace_and_hermiticity(self, driven, expansion):
        rho = gibbs_state(driven, 0.0, BETA)
        state = Tcl2State.initial(rho, expansion.K)
        H = hamiltonian(driven, 0.5)
        for _ in range(3):
            derivative = tcl2_rhs(state, H, SIGMA_X, expansion)
            state = Tcl2State(state.rho + 0.1 * derivative.rho,
                              state.aux + 0.1 * derivative.aux,
                              state.aux_conj + 0.1 * derivative.aux_conj)
        drho = tcl2_rhs(state, H, SIGMA_X, expansion).rho
        assert abs(np.trace(drho)) < 1e-12
        assert np.allclose(drho, drho.conj().T), 'ρ̇_S должен быть эрмитовым'

    def test_01_tcl2_decoupled(self, driven):
        rho = gibbs_state(driven, 0.0, BETA)
        state = Tcl2State.initial(rho, 0)
        H = hamiltonian(driven, 0.5)
        drho = tcl2_rhs(state, H, SIGMA_X,
                        ExponentialExpansion.decoupled(BETA)).rho
        assert np.allclose(drho, -1j * (H @ rho - rho @ H)), (
            'Без ванны TCL2 сводится к уравнению фон Неймана'
        )

    def test_02_agksl_gibbs_is_stationary(self, tunable, drude, expansion):
        rho = gibbs_state(tunable, 1.5, BETA)
        drho = agksl_rhs(rho, tunable, 1.5, expansion, drude, BETA)
        assert np.max(np.abs(drho)) < 1e-12, (
            'Для tunable состояние Гиббса стационарно в A-GKSL'
        )

    def test_03_agksl_trace(self, driven, drude, expansion):
        rho = np.array([[0.6, 0.1 + 0.2j], [0.1 - 0.2j, 0.4]])
        drho = agksl_rhs(rho, driven, 0.7, expansion, drude, BETA)
        assert abs(np.trace(drho)) < 1e-12
        assert np.allclose(drho, drho.conj().T)


class Test02Integrators:

    def test_00_rk4_order(self):
        a = np.array([[-0.3, 1.0], [-1.0, -0.2]], dtype=complex)
        y0 = np.array([1.0, 0.5j])
        exact = expm(2.0 * a) @ y0
        errors = []
        for dt in (0.02, 0.01):
            y = y0
            for n in range(int(round(2.0 / dt))):
                y = rk4_step(lambda t, v: a @ v, n * dt, y, dt)
            errors.append(np.max(np.abs(y - exact)))
        order = np.log2(errors[0] / errors[1])
        assert order > 3.8, f'Порядок RK4 {order:.2f} меньше четырех'

    def test_01_unit_propagator(self):
        m = np.array([[-1.0, 0.5], [0.0, -2.0]], dtype=complex)
        c = np.array([1.0, 1.0], dtype=complex)
        step = UnitPropagator(sp.csr_matrix(m), c)
        y = np.zeros(2, dtype=complex)
        for _ in range(60):
            y = step(y)
        assert np.allclose(y, -np.linalg.solve(m, c)), (
            'Точный пропагатор должен сходиться к неподвижной точке'
        )


class Test03Solvers:

    def test_00_unknown_method(self, driven, drude, expansion):
        with pytest.raises(ConfigError):
            make_solver('redfield', driven, expansion, drude, BETA)

    @pytest.mark.parametrize('method', [HEOM, TCL2, AGKSL])
    def test_01_propagation_invariants(self, driven, drude, expansion,
                                       method):
        solver = make_solver(method, driven, expansion, drude, BETA, 2)
        y0 = solver.initial(gibbs_state(driven, 0.0, BETA))
        traj = propagate(solver, y0, Linear(0.0, 1.0, 0.2), 1e-3)
        assert len(traj.times) == 201
        assert trace_error(traj.states) < 1e-10, 'След ρ_S должен быть 1'
        assert hermiticity_error(traj.states) < 1e-10, (
            'ρ_S должна оставаться эрмитовой'
        )
        assert traj.min_eigenvalues.min() > -1e-10
        assert traj.method == method

    def test_02_decoupled_constant(self, driven):
        exp = ExponentialExpansion.decoupled(BETA)
        bath = SpectralDensity.drude(1.0, 0.0)
        solver = make_solver(HEOM, driven, exp, bath, BETA)
        assert solver.dim == 4, 'Без ванны иерархия состоит из ρ_S'
        y0 = equilibrate(solver)
        traj = propagate(solver, y0, Linear(0.0, 0.0, 0.1), 1e-3)
        assert np.allclose(traj.states, traj.states[0])
        assert np.max(np.abs(traj.derivatives)) < 1e-14

    @pytest.mark.parametrize('method', [HEOM, TCL2])
    def test_03_steady_state_matches_equilibrate(self, driven, drude,
                                                 expansion, method):
        solver = make_solver(method, driven, expansion, drude, BETA, 2)
        relaxed = solver.reduced(equilibrate(solver, 0.5, tol=1e-12,
                                             t_max=1e3))
        direct = solver.reduced(steady_state(solver, 0.5))
        assert trace_distance(relaxed, direct) < 1e-8, (
            'Прямое решение и релаксация дают разные стационарные состояния'
        )
        assert np.trace(direct) == pytest.approx(1.0)

    def test_04_equilibration_limit(self, driven, drude, expansion):
        solver = make_solver(HEOM, driven, expansion, drude, BETA, 2)
        with pytest.raises(EquilibrationError) as info:
            equilibrate(solver, tol=1e-14, t_max=2.0)
        assert info.value.elapsed == pytest.approx(2.0)

    def test_05_weak_coupling_near_gibbs(self, driven, expansion):
        weak = SpectralDensity.drude(1.0, 0.002)
        exp = matsubara_expansion(weak, BETA, 1)
        solver = make_solver(HEOM, driven, exp, weak, BETA, 2)
        rho = solver.reduced(steady_state(solver, 0.5))
        assert trace_distance(rho, gibbs_state(driven, 0.5, BETA)) < 1e-2, (
            'При слабой связи стационарное состояние близко к Гиббсу'
        )


class Test04Tcl2Solver:

    @pytest.fixture
    def weak(self):
        return SpectralDensity.drude(5.0, 0.002)

    def test_00_rhs_matches_tcl2_rhs(self, driven, drude, expansion):
        solver = make_solver(TCL2, driven, expansion, drude, BETA)
        rng = np.random.default_rng(3)
        y = rng.normal(size=solver.dim) + 1j * rng.normal(size=solver.dim)
        state = Tcl2State.from_flat(y, expansion.K)
        direct = tcl2_rhs(state, hamiltonian(driven, 0.3), SIGMA_X,
                          expansion).flat()
        assert np.allclose(solver.rhs(0.3, y), direct), (
            'Правая часть решателя TCL2 должна совпадать с tcl2_rhs, '
            'включая источник dₖV и произведения Cₖρ'
        )

    def test_01_stationary_aux_resolvent(self, driven, expansion):
        H = hamiltonian(driven, 0.7)
        energies, U = np.linalg.eigh(H)
        V = U.conj().T @ SIGMA_X @ U
        gaps = energies[:, None] - energies[None, :]
        for d, z in zip(expansion.d, expansion.z):
            expected = U @ (d * V / (z + 1j * gaps)) @ U.conj().T
            assert np.allclose(stationary_aux(H, SIGMA_X, d, z), expected), (
                'Cₖ должен совпадать с резольвентой в собственном базисе H'
            )

    def test_02_steady_state_is_fixed_point(self, driven, drude, expansion):
        solver = make_solver(TCL2, driven, expansion, drude, BETA)
        y = steady_state(solver, 0.5)
        assert np.max(np.abs(solver.rhs(0.5, y))) < 1e-10, (
            'Стационарное состояние TCL2 должно обнулять всю правую часть'
        )
        state = Tcl2State.from_flat(y, expansion.K)
        H = hamiltonian(driven, 0.5)
        for k in range(expansion.K):
            assert np.allclose(state.aux[k], stationary_aux(
                H, SIGMA_X, expansion.d[k], expansion.z[k]))
            assert np.allclose(state.aux_conj[k], stationary_aux(
                H, SIGMA_X, expansion.d_conj[k], expansion.z[k]))

    def test_03_weak_coupling_matches_heom(self, driven, weak):
        exp = matsubara_expansion(weak, BETA, 2)
        protocol = Linear(0.0, 1.0, 1.0)
        states = {}
        for method in (HEOM, TCL2):
            solver = make_solver(method, driven, exp, weak, BETA, 2)
            y0 = steady_state(solver, 0.0)
            states[method] = propagate(solver, y0, protocol, 1e-3).states
        worst = max(trace_distance(a, b)
                    for a, b in zip(states[HEOM], states[TCL2]))
        assert worst <= 1e-3, (
            f'При слабой связи TCL2 отличается от HEOM на {worst:.2e}'
        )

    def test_04_weak_coupling_equilibrium(self, driven, weak):
        exp = matsubara_expansion(weak, BETA, 2)
        solver = make_solver(TCL2, driven, exp, weak, BETA)
        relaxed = solver.reduced(equilibrate(solver, 0.5, tol=1e-9,
                                             t_max=1e5))
        direct = solver.reduced(steady_state(solver, 0.5))
        assert trace_distance(relaxed, direct) < 1e-5
        assert trace_distance(direct, gibbs_state(driven, 0.5, BETA)) < 1e-2, (
            'При слабой связи равновесие TCL2 близко к состоянию Гиббса'
        )
