"""Dense complex matrix utilities and a self-contained Hermitian eigensolver.

Everything operates on plain ``numpy`` arrays with ``complex128`` entries.
Functions are pure; randomized operations take an explicit seed, so results
are reproducible under any scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from ._jacobi import jacobi_sweeps
from .errors import (
    ConvergenceError,
    DimensionError,
    HermiticityError,
    NonCommutingError,
)

DEFAULT_TOL = 1e-10
KRON_ROW_LIMIT = 4096
MAX_SWEEPS = 100

_EPS = float(np.finfo(np.float64).eps)


class Signature(NamedTuple):
    """Counts of positive, negative, and zero-classified eigenvalues."""

    positive: int
    negative: int
    zero: int


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` is sorted descending; column ``k`` of the unitary
    ``vectors`` pairs with ``eigenvalues[k]``.  Ties are broken by the
    ascending diagonal index of the reduced matrix, so output is
    deterministic for identical input.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray
    signature: Signature

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionError(f"matrix dimensions must be positive, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DimensionError("matrix contains non-finite entries")
    return m


def frobenius_norm(a) -> float:
    """Frobenius norm sqrt(tr(A A^dagger)); zero iff the matrix is zero."""
    return float(np.linalg.norm(as_matrix(a)))


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(
            f"inner dimensions do not match: {a.shape} x {b.shape}"
        )
    return a @ b


def kron(a, b, max_rows: int = KRON_ROW_LIMIT) -> np.ndarray:
    """Kronecker product with a size guard on the result."""
    a = as_matrix(a)
    b = as_matrix(b)
    rows = a.shape[0] * b.shape[0]
    if rows > max_rows:
        raise DimensionError(
            f"kron result would have {rows} rows, above the limit {max_rows}"
        )
    return np.kron(a, b)


def hermiticity_residual(a) -> float:
    """||A - A^dagger||_F, the measured deviation from Hermitian symmetry."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"matrix is not square: {a.shape}")
    return float(np.linalg.norm(a - a.conj().T))


def symmetrize(a) -> np.ndarray:
    """Explicit Hermitian repair (A + A^dagger) / 2."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"matrix is not square: {a.shape}")
    return 0.5 * (a + a.conj().T)


def require_hermitian(a, tol: float = DEFAULT_TOL, symmetrize: bool = False) -> np.ndarray:
    """Validate Hermiticity and return an exactly-Hermitian working copy.

    Inputs with ||A - A^dagger||_F above tol * max(1, ||A||_F) are rejected
    unless ``symmetrize`` explicitly requests the (A + A^dagger)/2 repair;
    repair never happens silently.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"matrix is not square: {a.shape}")
    if not symmetrize:
        residual = float(np.linalg.norm(a - a.conj().T))
        scale = max(1.0, float(np.linalg.norm(a)))
        if residual > tol * scale:
            raise HermiticityError(
                f"matrix is not Hermitian: ||A - A^dagger||_F = {residual:.6e} "
                f"exceeds {tol:g} * {scale:.6e}; pass symmetrize to repair"
            )
    return 0.5 * (a + a.conj().T)


def _check_tol(tol: float) -> None:
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")


def hermitian_eig(a, tol: float = DEFAULT_TOL, symmetrize: bool = False) -> Spectrum:
    """Eigendecomposition A = Q diag(w) Q^dagger of a Hermitian matrix.

    Uses cyclic Jacobi with complex Givens rotations.  Convergence is
    declared when the off-diagonal Frobenius mass drops below
    tol * ||A||_F (the kernel pushes further when it cheaply can), with a
    hard cap of 100 sweeps.  Eigenvalues are sorted descending and the
    signature classifies |w| <= tol * max(1, ||A||_F) as zero.
    """
    _check_tol(tol)
    h = require_hermitian(a, tol, symmetrize)
    n = h.shape[0]
    norm = float(np.linalg.norm(h))
    target = tol * norm
    # aim an extra two decades below the contract when machine precision allows
    goal = max(0.01 * target, min(target, 40.0 * _EPS * norm))
    work = np.ascontiguousarray(h, dtype=np.complex128)
    q = np.eye(n, dtype=np.complex128)
    _, off = jacobi_sweeps(work, q, goal, MAX_SWEEPS)
    if off > target:
        raise ConvergenceError(
            f"Jacobi sweeps did not converge after {MAX_SWEEPS} sweeps; "
            f"final off-diagonal residual {off:.6e} (target {target:.6e})",
            residual=float(off),
        )
    vals = work.diagonal().real.copy()
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    q = np.ascontiguousarray(q[:, order])
    zero_cut = tol * max(1.0, norm)
    positive = int(np.count_nonzero(vals > zero_cut))
    negative = int(np.count_nonzero(vals < -zero_cut))
    return Spectrum(vals, q, Signature(positive, negative, n - positive - negative))


def commutator_residual(a, b) -> float:
    """||AB - BA||_F; at most tol-level iff the pair commutes numerically."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise DimensionError(
            f"commutator needs equal square shapes, got {a.shape} and {b.shape}"
        )
    return float(np.linalg.norm(a @ b - b @ a))


def _commuting_scale(a: np.ndarray, b: np.ndarray) -> float:
    return max(1.0, float(np.linalg.norm(a)) * float(np.linalg.norm(b)))


def check_commuting(family: Sequence[np.ndarray], tol: float = DEFAULT_TOL) -> None:
    """Raise NonCommutingError naming the worst pair if any two members fail."""
    worst = (-1.0, None)
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            residual = commutator_residual(family[i], family[j])
            rel = residual / _commuting_scale(family[i], family[j])
            if rel > worst[0]:
                worst = (rel, (i, j, residual))
    if worst[1] is not None and worst[0] > tol:
        i, j, residual = worst[1]
        raise NonCommutingError(
            f"members {i} and {j} do not commute: "
            f"||[A{i}, A{j}]||_F = {residual:.6e}",
            pair=(i, j),
            residual=residual,
        )


def simultaneous_diag(
    family: Sequence[np.ndarray],
    tol: float = DEFAULT_TOL,
    seed: int = 0,
) -> tuple[np.ndarray, list[np.ndarray]]:
    """Jointly diagonalize a commuting Hermitian family.

    Diagonalizes a random positively-weighted combination (weights drawn
    from [0.5, 1.5] with the given seed) and verifies that the resulting
    basis diagonalizes every member.  Generic weights split degenerate
    clusters with probability 1; on a verification failure the weights are
    resampled, at most three attempts.

    Returns (q, diagonals) with q unitary and
    q @ diag(diagonals[i]) @ q^dagger == family[i] within tol.
    """
    _check_tol(tol)
    if len(family) == 0:
        raise DimensionError("family must contain at least one matrix")
    mats = [require_hermitian(f, tol) for f in family]
    n = mats[0].shape[0]
    for k, m in enumerate(mats):
        if m.shape != (n, n):
            raise DimensionError(
                f"family member {k} has shape {m.shape}, expected {(n, n)}"
            )
    check_commuting(mats, tol)
    # a family that is already jointly diagonal keeps its basis untouched
    if all(
        float(np.linalg.norm(m - np.diag(m.diagonal())))
        <= tol * max(1.0, float(np.linalg.norm(m)))
        for m in mats
    ):
        return (
            np.eye(n, dtype=np.complex128),
            [m.diagonal().real.copy() for m in mats],
        )
    rng = np.random.default_rng(seed)
    worst = None
    for _ in range(3):
        weights = rng.uniform(0.5, 1.5, size=len(mats))
        combo = sum(w * m for w, m in zip(weights, mats))
        q = hermitian_eig(combo, tol).vectors
        diagonals = []
        ok = True
        for m in mats:
            rotated = q.conj().T @ m @ q
            d = rotated.diagonal().real.copy()
            residual = float(np.linalg.norm(rotated - np.diag(d)))
            if residual > tol * max(1.0, float(np.linalg.norm(m))):
                worst = residual
                ok = False
                break
            diagonals.append(d)
        if ok:
            return q, diagonals
    raise ConvergenceError(
        "simultaneous diagonalization failed to resolve degeneracies after "
        f"3 weight resamplings; worst diagonal residual {worst:.6e}",
        residual=worst,
    )
