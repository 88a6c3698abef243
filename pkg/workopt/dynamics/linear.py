"""
Матричная форма линейных правых частей и точный пропагатор на фиксированном
интервале.
"""

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.sparse.linalg import expm_multiply

DENSE_LIMIT = 2048

I2 = np.eye(2, dtype=complex)


def left(a):
    """Супероператор X ↦ aX для построчной векторизации."""
    return np.kron(a, I2)


def right(b):
    """Супероператор X ↦ Xb для построчной векторизации."""
    return np.kron(I2, b.T)


def commutator(a):
    return left(a) - right(a)


def linearize(rhs, dim):
    """
    Матрица аффинного отображения y ↦ My + c, найденная по единичным векторам.

    Args:
        rhs (callable): Аффинное отображение комплексных векторов.
        dim (int): Размерность.

    Returns:
        tuple[scipy.sparse.csr_matrix, numpy.ndarray]: M и c.
    """
    offset = np.asarray(rhs(np.zeros(dim, dtype=complex)), dtype=complex)
    columns = []
    for j in range(dim):
        e = np.zeros(dim, dtype=complex)
        e[j] = 1.0
        columns.append(np.asarray(rhs(e), dtype=complex) - offset)
    matrix = sp.csr_matrix(np.column_stack(columns))
    matrix.eliminate_zeros()
    return matrix, offset


class UnitPropagator:
    """
    Точный пропагатор exp(M·T) для ẏ = My + c.

    Аффинная часть учитывается расширением
    [[M, c], [0, 0]]; при размерности до DENSE_LIMIT экспонента строится
    явно, иначе применяется expm_multiply к разреженной матрице.
    """

    def __init__(self, matrix, offset, period=1.0):
        dim = matrix.shape[0]
        self.dim = dim
        augmented = sp.bmat([
            [sp.csr_matrix(matrix), sp.csr_matrix(offset.reshape(-1, 1))],
            [None, sp.csr_matrix((1, 1), dtype=complex)],
        ], format='csr') * period
        if dim + 1 <= DENSE_LIMIT:
            self._dense = scipy.linalg.expm(augmented.toarray())
            self._sparse = None
        else:
            self._dense = None
            self._sparse = augmented.tocsc()

    def __call__(self, y):
        extended = np.concatenate((y, [1.0 + 0j]))
        if self._dense is not None:
            return (self._dense @ extended)[:self.dim]
        return expm_multiply(self._sparse, extended)[:self.dim]
