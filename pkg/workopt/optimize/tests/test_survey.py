from concurrent.futures import Future
from unittest import mock

import numpy as np
from django.test import TestCase

from core.numerics import RunSettings
from optimize.models import DONE, FAILED, SurveyRecord
from optimize.protocols import LINEAR
from optimize.simplex import OptimizerConfig
from optimize.survey import (SurveyGrid, _collect, survey, survey_key,
                             sweep_rows)
from system import TwoLevelModel


class SurveyTest(TestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.grid = SurveyGrid(TwoLevelModel.tunable(), (1.0,), (1.0,), (0.0,),
                              (0.1,), (LINEAR,))
        cls.run_settings = RunSettings.from_settings()
        cls.cfg = OptimizerConfig()

    def test_decoupled_cell(self):
        """Проверяем работу линейного протокола без ванны"""
        key, records = survey(self.grid, self.run_settings, self.cfg)
        self.assertEqual(len(records), 1)
        record = records[0]
        self.assertEqual(record.status, DONE)
        self.assertAlmostEqual(record.work, -0.5 * np.tanh(0.5), places=8)
        self.assertEqual(record.survey, key)

    def test_done_cells_skipped(self):
        """Проверяем, что выполненные ячейки не пересчитываются"""
        survey(self.grid, self.run_settings, self.cfg)
        with mock.patch('optimize.survey.run_cell') as run_cell:
            _, records = survey(self.grid, self.run_settings, self.cfg)
        run_cell.assert_not_called()
        self.assertEqual(len(records), 1)
        self.assertEqual(SurveyRecord.objects.count(), 1)

    def test_key_depends_on_grid(self):
        """Проверяем, что ключ обзора меняется вместе с сеткой"""
        other = SurveyGrid(self.grid.model, (2.0,), (1.0,), (0.0,), (0.1,),
                           (LINEAR,))
        self.assertNotEqual(survey_key(self.grid, self.run_settings, self.cfg),
                            survey_key(other, self.run_settings, self.cfg))

    def test_sweep_rows(self):
        """Проверяем поля строк CSV обзора"""
        _, records = survey(self.grid, self.run_settings, self.cfg)
        row = next(sweep_rows(records))
        self.assertEqual(
            list(row),
            ['beta', 'gamma', 'xi', 'tau', 'protocol', 'W', 'W_ex', 'status'],
        )
        self.assertEqual(row['protocol'], LINEAR)

    def test_record_str(self):
        """Проверяем, что у модели корректно работает __str__"""
        record = SurveyRecord(survey='abcdef0123', beta=1.0, gamma=5.0,
                              xi=0.2, tau=0.5, kind=LINEAR, status=DONE)
        self.assertEqual(str(record),
                         'abcdef01 β=1 γ=5 ξ=0.2 τ=0.5 linear: done')

    def test_unexpected_error_recorded(self):
        """Проверяем, что любая ошибка ячейки дает запись failed"""
        grid = SurveyGrid(self.grid.model, (1.0,), (1.0,), (0.0,),
                          (0.1, 0.2), (LINEAR,))
        real = {'W': -0.2, 'W_ex': 0.0}
        with mock.patch('optimize.survey.run_cell',
                        side_effect=[RuntimeError('сбой LAPACK'), real]):
            _, records = survey(grid, self.run_settings, self.cfg)
        by_tau = {record.tau: record for record in records}
        self.assertEqual(len(by_tau), 2, 'Обзор должен дойти до второй ячейки')
        self.assertEqual(by_tau[0.1].status, FAILED)
        self.assertIn('RuntimeError: сбой LAPACK', by_tau[0.1].error)
        self.assertEqual(by_tau[0.2].status, DONE)
        self.assertEqual(by_tau[0.2].work, -0.2)

    def test_failed_cell_recomputed(self):
        """Проверяем повторный расчет ячеек со статусом failed"""
        with mock.patch('optimize.survey.run_cell',
                        side_effect=ValueError('нет')):
            survey(self.grid, self.run_settings, self.cfg)
        _, records = survey(self.grid, self.run_settings, self.cfg)
        self.assertEqual([record.status for record in records], [DONE])

    def test_crashed_worker_collected(self):
        """Проверяем, что аварийное завершение процесса не прерывает обзор"""
        future = Future()
        future.set_exception(OSError('процесс убит'))
        status, summary, error = _collect(future)
        self.assertEqual(status, FAILED)
        self.assertEqual(summary, {})
        self.assertIn('процесс убит', error)
