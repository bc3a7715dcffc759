"""Seeded random-instance generators used by the CLI and the test harness."""

from __future__ import annotations

import numpy as np

from .errors import DimensionError


def _as_rng(seed_or_rng) -> np.random.Generator:
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def random_givens_unitary(n: int, rng=0) -> np.ndarray:
    """Unitary built from the n(n-1)/2 complex Givens rotations with random angles."""
    rng = _as_rng(rng)
    u = np.eye(n, dtype=np.complex128)
    for p in range(n - 1):
        for q in range(p + 1, n):
            theta = rng.uniform(0.0, 2.0 * np.pi)
            phi = rng.uniform(0.0, 2.0 * np.pi)
            c = np.cos(theta)
            s = np.sin(theta) * np.exp(1.0j * phi)
            g = np.eye(n, dtype=np.complex128)
            g[p, p] = c
            g[p, q] = s
            g[q, p] = -np.conj(s)
            g[q, q] = c
            u = u @ g
    return u


def random_hermitian(n: int, rng=0, scale: float = 1.0) -> np.ndarray:
    """Dense Hermitian matrix with Gaussian entries of the given scale."""
    rng = _as_rng(rng)
    m = rng.normal(scale=scale, size=(n, n)) + 1.0j * rng.normal(scale=scale, size=(n, n))
    return 0.5 * (m + m.conj().T)


def random_psd(n: int, rng=0, rank: int | None = None) -> np.ndarray:
    """PSD matrix L L^dagger from a random complex factor L of shape (n, rank)."""
    rng = _as_rng(rng)
    k = n if rank is None else rank
    l = rng.normal(size=(n, k)) + 1.0j * rng.normal(size=(n, k))
    m = l @ l.conj().T
    return 0.5 * (m + m.conj().T)


def random_density(n: int, rng=0) -> np.ndarray:
    """Random density matrix: a trace-normalized full-rank PSD matrix."""
    rho = random_psd(n, rng)
    return rho / float(np.trace(rho).real)


def random_commuting_family(
    n: int,
    size: int,
    rng=0,
    sign_aligned: bool = True,
) -> list[np.ndarray]:
    """Commuting Hermitian family sharing one random eigenbasis.

    With ``sign_aligned`` every member carries the same +/- sign pattern
    across the common eigenslots, with magnitudes bounded away from zero.
    In that regime the positive/negative parts add term by term, which is
    what the construction is for; without it the slot signs are free and
    cancellation between members is allowed.
    """
    if size < 1:
        raise DimensionError("family size must be at least 1")
    rng = _as_rng(rng)
    q = random_givens_unitary(n, rng)
    signs = np.where(rng.uniform(size=n) < 0.5, -1.0, 1.0)
    family = []
    for _ in range(size):
        if sign_aligned:
            d = signs * rng.uniform(0.2, 1.2, size=n)
        else:
            d = rng.uniform(-1.0, 1.0, size=n)
        m = (q * d) @ q.conj().T
        family.append(0.5 * (m + m.conj().T))
    return family
