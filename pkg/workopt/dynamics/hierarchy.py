"""
Иерархические уравнения движения (HEOM) для двухуровневой системы.

Для каждого мультииндекса 𝐣 с Σjₖ ≤ D_H:

    ρ̇_𝐣 = −[iH× + Σₖ zₖjₖ + ηV×V×]ρ_𝐣
          + Σₖ √jₖ (dₖV^L − d′ₖV^R) ρ_{𝐣−𝐞ₖ}
          − Σₖ √(jₖ+1) V× ρ_{𝐣+𝐞ₖ}.
"""

from itertools import combinations_with_replacement
from math import comb

import attrs
import numpy as np
import scipy.sparse as sp

from .linear import commutator, left, right

I4 = sp.identity(4, dtype=complex, format='csr')


class HierarchyIndex:
    """
    Биекция мультииндекс ↔ номер блока и ссылки на соседей 𝐣 ± 𝐞ₖ.

    Attributes:
        n_terms (int): Число слагаемых разложения K.
        depth (int): Глубина D_H.
        occupations (numpy.ndarray): Мультииндексы, форма (n_blocks, K).
        offsets (dict): Мультииндекс (tuple) → номер блока.
        lower (numpy.ndarray): Номер блока 𝐣 − 𝐞ₖ или −1.
        upper (numpy.ndarray): Номер блока 𝐣 + 𝐞ₖ или −1.
    """

    def __init__(self, n_terms, depth):
        self.n_terms = n_terms
        self.depth = depth
        labels = []
        for level in range(depth + 1):
            for combo in combinations_with_replacement(range(n_terms), level):
                labels.append(tuple(
                    np.bincount(np.array(combo, dtype=int),
                                minlength=n_terms).tolist()
                ))
        self.offsets = {label: i for i, label in enumerate(labels)}
        self.occupations = np.array(labels, dtype=int).reshape(
            len(labels), n_terms
        )
        self.lower = np.full((len(labels), n_terms), -1, dtype=int)
        self.upper = np.full((len(labels), n_terms), -1, dtype=int)
        for i, label in enumerate(labels):
            for k in range(n_terms):
                if label[k] > 0:
                    down = list(label)
                    down[k] -= 1
                    self.lower[i, k] = self.offsets[tuple(down)]
                up = list(label)
                up[k] += 1
                self.upper[i, k] = self.offsets.get(tuple(up), -1)
        assert len(labels) == comb(depth + n_terms, n_terms)

    @property
    def n_blocks(self):
        return len(self.offsets)

    def __len__(self):
        return self.n_blocks


@attrs.define
class HierarchyState:
    """
    Набор вспомогательных операторов ρ_𝐣.

    Attributes:
        index (HierarchyIndex): Индексация блоков.
        blocks (numpy.ndarray): Матрицы 2×2, форма (n_blocks, 2, 2).
    """
    index: HierarchyIndex
    blocks: np.ndarray

    @classmethod
    def initial(cls, index, rho):
        blocks = np.zeros((index.n_blocks, 2, 2), dtype=complex)
        blocks[0] = rho
        return cls(index, blocks)

    @property
    def rho(self):
        return self.blocks[0]

    def flat(self):
        return self.blocks.reshape(-1)

    @classmethod
    def from_flat(cls, index, y):
        return cls(index, np.asarray(y).reshape(index.n_blocks, 2, 2))


def heom_rhs(state, H, V, exp):
    """
    Производная иерархии по времени.

    Args:
        state (HierarchyState): Текущее состояние.
        H (numpy.ndarray): Гамильтониан системы.
        V (numpy.ndarray): Оператор связи.
        exp (ExponentialExpansion): Разложение корреляционной функции.

    Returns:
        HierarchyState: Производная; соседи вне иерархии считаются нулевыми.
    """
    index = state.index
    b = state.blocks
    occ = index.occupations
    rates = occ @ exp.z if exp.K else np.zeros(index.n_blocks)
    out = -1j * (H @ b - b @ H) - rates[:, None, None] * b
    if exp.eta:
        vb = V @ b - b @ V
        out = out - exp.eta * (V @ vb - vb @ V)
    d, dc = exp.d, exp.d_conj
    for k in range(exp.K):
        rows = np.flatnonzero(index.lower[:, k] >= 0)
        src = b[index.lower[rows, k]]
        scale = np.sqrt(occ[rows, k])[:, None, None]
        out[rows] += scale * (d[k] * (V @ src) - dc[k] * (src @ V))
        rows = np.flatnonzero(index.upper[:, k] >= 0)
        src = b[index.upper[rows, k]]
        scale = np.sqrt(occ[rows, k] + 1)[:, None, None]
        out[rows] -= scale * (V @ src - src @ V)
    return HierarchyState(index, out)


def _neighbour_matrix(index, k, which):
    n = index.n_blocks
    links = index.lower if which == 'lower' else index.upper
    rows = np.flatnonzero(links[:, k] >= 0)
    cols = links[rows, k]
    occ = index.occupations[rows, k]
    values = np.sqrt(occ if which == 'lower' else occ + 1).astype(complex)
    return sp.csr_matrix((values, (rows, cols)), shape=(n, n))


def heom_generator(index, H, V, exp):
    """
    Разреженная матрица линейного отображения heom_rhs.

    Векторизация построчная, блоки идут подряд в порядке index.offsets.
    """
    n = index.n_blocks
    v_comm = sp.csr_matrix(commutator(V))
    system = -1j * commutator(H)
    if exp.eta:
        system = system - exp.eta * commutator(V) @ commutator(V)
    rates = index.occupations @ exp.z if exp.K else np.zeros(n)
    generator = (sp.kron(sp.identity(n, dtype=complex), sp.csr_matrix(system))
                 - sp.kron(sp.diags(rates.astype(complex)), I4))
    d, dc = exp.d, exp.d_conj
    for k in range(exp.K):
        coupling = sp.csr_matrix(d[k] * left(V) - dc[k] * right(V))
        generator = generator + sp.kron(
            _neighbour_matrix(index, k, 'lower'), coupling
        )
        generator = generator - sp.kron(
            _neighbour_matrix(index, k, 'upper'), v_comm
        )
    generator = generator.tocsr()
    generator.eliminate_zeros()
    return generator
