"""
Иерархия исключений проекта.

Каждый класс несет код завершения процесса, в который его переводят
команды управления.
"""


class WorkoptError(Exception):
    """Базовое исключение проекта."""
    exit_code = 1


class ConfigError(WorkoptError):
    """Некорректная конфигурация или входные параметры."""
    exit_code = 2


class InvalidAnsatz(ConfigError):
    """Параметры анзаца протокола несовместимы."""


class GridMismatch(ConfigError):
    """Шаг сетки не делит длительность протокола или ширину импульса."""


class GridError(ConfigError):
    """Сетка не подходит для квадратурной формулы."""


class NumericalError(WorkoptError):
    """Сбой численного метода."""
    exit_code = 3


class NonIntegrableSpectrum(NumericalError):
    """Корреляционная функция спектральной плотности не существует."""


class QuadratureError(NumericalError):
    """Адаптивная квадратура не достигла заданной точности."""


class FitFailure(NumericalError):
    """
    Экспоненциальное разложение не достигло допуска.

    Attributes:
        residual (float): Достигнутая относительная невязка.
    """

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class DegenerateGap(NumericalError):
    """Нулевая щель гамильтониана, собственный базис не определен."""


class PropagationError(NumericalError):
    """
    Расходимость при интегрировании уравнений движения.

    Attributes:
        step (int): Номер шага, на котором обнаружено нечисловое значение.
    """

    def __init__(self, message, step):
        super().__init__(message)
        self.step = step


class IndefiniteHessian(NumericalError):
    """Дискретизованная квадратичная форма не положительно определена."""


class DegenerateAnsatz(NumericalError):
    """Вырожденная система для параметров анзаца."""


class NonFiniteObjective(NumericalError):
    """
    Целевая функция вернула NaN.

    Attributes:
        x (numpy.ndarray): Вектор параметров, на котором это произошло.
    """

    def __init__(self, message, x):
        super().__init__(message)
        self.x = x


class ConvergenceError(WorkoptError):
    """Итерационный процесс не сошелся."""
    exit_code = 4


class EquilibrationError(ConvergenceError):
    """
    Стационарное состояние не достигнуто за отведенное время.

    Attributes:
        residual (float): Последнее изменение состояния за единицу времени.
        elapsed (float): Прошедшее время релаксации.
    """

    def __init__(self, message, residual, elapsed):
        super().__init__(message)
        self.residual = residual
        self.elapsed = elapsed
