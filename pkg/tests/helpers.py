"""Small constructions used across tests."""

import random

import numpy as np

from relhopf.tensorlin import LinearMap, nullspace


def _blocks(F, a, b):
    n, m = a.shape[0], b.shape[0]
    out = F.zeros((n + m, n + m))
    out[:n, :n] = a
    out[n:, n:] = b
    return out


def sum_action(F, f, g):
    """Left action B (x) X -> X of a direct sum."""
    db, n, m = f.dom[0], f.cod[0], g.cod[0]
    fa, ga = f.entries.reshape(n, db, n), g.entries.reshape(m, db, m)
    arr = np.stack([_blocks(F, fa[:, b, :], ga[:, b, :]) for b in range(db)], axis=1)
    return LinearMap(F, (n + m,), (db, n + m), arr.reshape(n + m, -1))


def sum_coaction(F, f, g):
    db, n, m = f.cod[0], f.dom[0], g.dom[0]
    fa, ga = f.entries.reshape(db, n, n), g.entries.reshape(db, m, m)
    arr = np.stack([_blocks(F, fa[b], ga[b]) for b in range(db)], axis=0)
    return LinearMap(F, (db, n + m), (n + m,), arr.reshape(-1, n + m))


def sum_right_action(F, f, g):
    da, n, m = f.dom[1], f.cod[0], g.cod[0]
    fa, ga = f.entries.reshape(n, n, da), g.entries.reshape(m, m, da)
    arr = np.stack([_blocks(F, fa[:, :, a], ga[:, :, a]) for a in range(da)], axis=2)
    return LinearMap(F, (n + m,), (n + m, da), arr.reshape(n + m, -1))


def endomorphism_space(F, constraints, n):
    """Basis (as columns of row-major vectors) of the n x n matrices f with
    left @ f == f @ right for every pair."""
    rows = []
    eye = F.eye(n)
    for left, right in constraints:
        rows.append(F.reduce(np.kron(left, eye) - np.kron(eye, right.T)))
    system = np.concatenate(rows, axis=0)
    return nullspace(F, system)


def yd_endomorphisms(B, X):
    """Basis of maps X -> X commuting with the action and the coaction."""
    F, db, n = B.field, B.dim, X.dim
    act = X.action.entries.reshape(n, db, n)
    co = X.coaction.entries.reshape(db, n, n)
    pairs = [(act[:, b, :], act[:, b, :]) for b in range(db)]
    pairs += [(co[b], co[b]) for b in range(db)]
    return endomorphism_space(F, pairs, n)


def random_combination(F, basis, n, rng: random.Random):
    coeffs = F.array([F.random(rng) for _ in range(basis.shape[1])])
    vec = F.matmul(basis, coeffs.reshape(-1, 1)).reshape(n, n)
    return LinearMap(F, (n,), (n,), vec)
