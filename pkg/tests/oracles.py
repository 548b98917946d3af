"""Independent reference constructions used only by the tests."""
from __future__ import annotations

import itertools
from functools import reduce

import numpy as np

_I = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def clifford_generators(k: int) -> list[np.ndarray]:
    """k pairwise anticommuting matrices squaring to the identity (Jordan-Wigner)."""
    qubits = max(1, (k + 1) // 2)
    out = []
    for i in range(k):
        m, which = divmod(i, 2)
        factors = [_Z] * m + [_X if which == 0 else _Y] + [_I] * (qubits - m - 1)
        out.append(reduce(np.kron, factors))
    return out


def spin_matrices(parts: tuple[int, ...]) -> dict[tuple[int, tuple[int, ...]], np.ndarray]:
    """Matrices for every normal form t^e x_1^e1 ... x_k^ek, with t -> -1.

    x_i goes to gamma_i when x_i^2 = 1 and to i*gamma_i when x_i^2 = t.
    """
    k = len(parts)
    gens = []
    for a, g in zip(parts, clifford_generators(k)):
        gens.append(g if (a * (a - 1) // 2) % 2 == 0 else 1j * g)
    dim = gens[0].shape[0]
    out = {}
    for e in (0, 1):
        for xs in itertools.product((0, 1), repeat=k):
            m = np.eye(dim, dtype=complex) * (-1) ** e
            for b, g in zip(xs, gens):
                if b:
                    m = m @ g
            out[(e, xs)] = m
    return out


def triangular_rows(limit: int) -> dict[int, tuple[int, ...]]:
    rows, k = {}, 1
    while k * (k + 1) // 2 <= limit:
        rows[k * (k + 1) // 2] = tuple(2 * i for i in range(k, 0, -1))
        k += 1
    return rows


def so_rows(limit: int) -> dict[int, tuple[int, ...]]:
    rows, k = {}, 1
    while 2 * k * k <= limit:
        rows[2 * k * k] = tuple(range(4 * k - 1, 0, -2))
        k += 1
    return rows


def odd_primes(limit: int) -> list[int]:
    sieve = np.ones(limit, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return [int(p) for p in np.flatnonzero(sieve) if p != 2]
