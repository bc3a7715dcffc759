"""Cyclic-Jacobi sweep kernel for dense Hermitian matrices.

The kernel mutates its arguments in place and is compiled with numba when
available; the pure-Python fallback is identical but slow.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


@njit(cache=True)
def _offdiag_mass(a):
    n = a.shape[0]
    acc = 0.0
    for p in range(n - 1):
        for r in range(p + 1, n):
            acc += abs(a[p, r]) ** 2
    return np.sqrt(2.0 * acc)


@njit(cache=True)
def jacobi_sweeps(a, q, goal, max_sweeps):
    """Drive the off-diagonal Frobenius mass of Hermitian ``a`` below ``goal``.

    ``a`` is reduced toward diagonal form by complex Givens rotations that are
    accumulated into ``q`` (so the input satisfies a_in = q @ a_out @ q^H).
    Returns (sweeps_used, final_off_diagonal_mass).
    """
    n = a.shape[0]
    sweeps = 0
    off = _offdiag_mass(a)
    while off > goal and sweeps < max_sweeps:
        sweeps += 1
        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[p, r]
                mag = abs(apr)
                # entries this small cannot lift the total mass above goal
                if mag == 0.0 or n * n * mag <= goal:
                    continue
                app = a[p, p].real
                arr = a[r, r].real
                phase = apr / mag
                tau = (arr - app) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akr = a[k, r]
                    a[k, p] = c * akp - s * np.conj(phase) * akr
                    a[k, r] = s * phase * akp + c * akr
                for k in range(n):
                    apk = a[p, k]
                    ark = a[r, k]
                    a[p, k] = c * apk - s * phase * ark
                    a[r, k] = s * np.conj(phase) * apk + c * ark
                a[p, r] = 0.0
                a[r, p] = 0.0
                a[p, p] = complex(app - t * mag, 0.0)
                a[r, r] = complex(arr + t * mag, 0.0)
                for k in range(n):
                    qkp = q[k, p]
                    qkr = q[k, r]
                    q[k, p] = c * qkp - s * np.conj(phase) * qkr
                    q[k, r] = s * phase * qkp + c * qkr
        off = _offdiag_mass(a)
    return sweeps, off
