import logging

from dynamics import equilibrate, propagate

from .work import WorkReport, work, work_trapezoid

logger = logging.getLogger(__name__)


class WorkEvaluator:
    """
    Работа протоколов для одной системы и ванны.

    Начальное стационарное состояние вычисляется один раз и переиспользуется
    всеми вычислениями целевой функции.

    Attributes:
        solver (Solver): Решатель.
        delta_f (float): ΔF для отчетов.
        dt (float): Шаг интегрирования.
    """

    def __init__(self, solver, delta_f=0.0, dt=1e-3, eq_tol=1e-12,
                 eq_t_max=1e3):
        self.solver = solver
        self.delta_f = delta_f
        self.dt = dt
        self.eq_tol = eq_tol
        self.eq_t_max = eq_t_max
        self._y0 = None

    @property
    def initial_state(self):
        if self._y0 is None:
            self._y0 = equilibrate(self.solver, tol=self.eq_tol,
                                   t_max=self.eq_t_max)
        return self._y0

    def trajectory(self, protocol):
        return propagate(self.solver, self.initial_state, protocol, self.dt)

    def work(self, protocol):
        return work(self.trajectory(protocol), self.solver.model)

    def report(self, protocol, traj=None):
        traj = self.trajectory(protocol) if traj is None else traj
        m = self.solver.model
        value = work(traj, m)
        metadata = {
            **traj.metadata,
            'W_trapezoid': work_trapezoid(traj, m),
            'min_eigenvalue': float(traj.min_eigenvalues.min()),
        }
        report = WorkReport(value, self.delta_f, self.solver.method,
                            protocol.describe(), metadata)
        logger.info('%s: W = %.10g, W_ex = %.3e', self.solver.method,
                    report.W, report.excess_work)
        return report
