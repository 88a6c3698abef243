import json

import numpy as np

from dynamics import make_solver
from core.outputs import read_csv


def read_summary(out_dir):
    with open(out_dir / 'summary.json', encoding='utf-8') as f:
        return json.load(f)


def read_table(path):
    return read_csv(path)


def relative(a, b):
    return abs(a - b) / abs(b)


def small_solver(method, model, expansion, bath, beta, depth=2):
    return make_solver(method, model, expansion, bath, beta, depth)


def hermiticity_error(states):
    return float(np.max(np.abs(states - np.conj(np.swapaxes(states, 1, 2)))))


def trace_error(states):
    return float(np.max(np.abs(np.trace(states, axis1=1, axis2=2) - 1)))
