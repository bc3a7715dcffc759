"""Tensor-product splits and bipartite density-matrix machinery.

Covers the factor formula (B (x) C)_plus = B_plus (x) C_plus + B_minus (x)
C_minus, the operator-Schmidt decomposition in an orthonormal Hermitian
product basis, the partial transpose / PPT check, term-by-term approximation
of commuting sums, and the report comparing ||A - A_plus||_F against the
per-term product bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .approx import NearestPsd, PosNegParts, PsdCheck, is_psd, split_pos_neg
from .errors import DimensionError, HermiticityError, NotPsdError
from .linalg import (
    DEFAULT_TOL,
    Signature,
    as_matrix,
    check_commuting,
    frobenius_norm,
    hermitian_eig,
    kron,
    require_hermitian,
    simultaneous_diag,
    symmetrize,
)


def _check_bipartite(side: int, dims: Sequence[int]) -> tuple[int, int]:
    m, n = int(dims[0]), int(dims[1])
    if m < 1 or n < 1:
        raise DimensionError(f"bipartite dims must be positive, got ({m}, {n})")
    if m * n != side:
        raise DimensionError(
            f"bipartite dims ({m}, {n}) do not factor the side length {side}"
        )
    return m, n


def tensor_split(b, c, tol: float = DEFAULT_TOL) -> PosNegParts:
    """Positive/negative parts of b (x) c from the parts of the factors.

    plus = b_plus (x) c_plus + b_minus (x) c_minus and minus is the mixed
    combination; this agrees with splitting the Kronecker product directly
    because the eigenvalues of the product are the pairwise products.
    """
    sb = split_pos_neg(b, tol)
    sc = split_pos_neg(c, tol)
    plus = kron(sb.plus, sc.plus) + kron(sb.minus, sc.minus)
    minus = kron(sb.plus, sc.minus) + kron(sb.minus, sc.plus)
    pb, qb, zb = sb.signature
    pc, qc, zc = sc.signature
    total = (pb + qb + zb) * (pc + qc + zc)
    positive = pb * pc + qb * qc
    negative = pb * qc + qb * pc
    signature = Signature(positive, negative, total - positive - negative)
    return PosNegParts(plus, minus, signature)


def nearest_psd_tensor(b, c, tol: float = DEFAULT_TOL) -> NearestPsd:
    """Closest PSD matrix to b (x) c and the distance to it.

    The distance has the closed form
    sqrt(||b_plus||^2 ||c_minus||^2 + ||b_minus||^2 ||c_plus||^2) since the
    two mixed terms have orthogonal supports.
    """
    sb = split_pos_neg(b, tol)
    sc = split_pos_neg(c, tol)
    approximant = kron(sb.plus, sc.plus) + kron(sb.minus, sc.minus)
    distance = float(
        np.sqrt(
            (frobenius_norm(sb.plus) * frobenius_norm(sc.minus)) ** 2
            + (frobenius_norm(sb.minus) * frobenius_norm(sc.plus)) ** 2
        )
    )
    return NearestPsd(approximant, distance)


def hermitian_basis(d: int) -> np.ndarray:
    """Orthonormal Hermitian basis of d x d matrices, shape (d*d, d, d).

    Normalized identity first, then the symmetric and antisymmetric
    off-diagonal generators, then the diagonal generalized Gell-Mann
    matrices; tr(G_i G_j) = delta_ij.
    """
    if d < 1:
        raise DimensionError(f"basis dimension must be positive, got {d}")
    mats = [np.eye(d, dtype=np.complex128) / np.sqrt(d)]
    for j in range(d):
        for k in range(j + 1, d):
            sym = np.zeros((d, d), dtype=np.complex128)
            sym[j, k] = sym[k, j] = 1.0 / np.sqrt(2.0)
            mats.append(sym)
            asym = np.zeros((d, d), dtype=np.complex128)
            asym[j, k] = -1.0j / np.sqrt(2.0)
            asym[k, j] = 1.0j / np.sqrt(2.0)
            mats.append(asym)
    for l in range(1, d):
        diag = np.zeros(d, dtype=np.complex128)
        diag[:l] = 1.0
        diag[l] = -float(l)
        mats.append(np.diag(diag) / np.sqrt(l * (l + 1.0)))
    return np.stack(mats)


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Weighted sum A = sum_i weights[i] * factors_a[i] (x) factors_b[i].

    Weights are non-negative and sorted descending; the factor families are
    Hermitian and orthonormal under the trace inner product.  ``dropped``
    counts terms truncated because their weight fell below tol * weights[0].
    """

    weights: np.ndarray
    factors_a: tuple[np.ndarray, ...]
    factors_b: tuple[np.ndarray, ...]
    dims: tuple[int, int]

    dropped: int = 0

    @property
    def nterms(self) -> int:
        return len(self.weights)

    def reconstruct(self) -> np.ndarray:
        m, n = self.dims
        total = np.zeros((m * n, m * n), dtype=np.complex128)
        for w, fa, fb in zip(self.weights, self.factors_a, self.factors_b):
            total += w * np.kron(fa, fb)
        return total


def operator_schmidt(a, dims: Sequence[int], tol: float = DEFAULT_TOL) -> SchmidtDecomposition:
    """Operator-Schmidt decomposition of a bipartite Hermitian operator.

    Expands A in the Hermitian product basis G_k (x) H_l, giving a real
    coefficient matrix whose SVD (via the symmetric Gram matrix and the
    Hermitian eigensolver) yields non-negative weights and Hermitian,
    trace-orthonormal factor pairs.  At most min(dim_a^2, dim_b^2) terms
    survive; weights below tol * (largest weight) are dropped.
    """
    a = require_hermitian(a, tol)
    m, n = _check_bipartite(a.shape[0], dims)
    basis_a = hermitian_basis(m)
    basis_b = hermitian_basis(n)
    a4 = a.reshape(m, n, m, n)
    # coeff[x, y] = tr((G_x (x) H_y) A), real because everything is Hermitian
    coeff = np.einsum("xab,bdac,ycd->xy", basis_a, a4, basis_b).real
    gram = coeff.T @ coeff
    spectrum = hermitian_eig(gram, tol)
    right = spectrum.vectors.real
    images = coeff @ right
    # the Gram eigenvalues square the condition number; measuring each weight
    # as ||coeff @ v|| keeps true small components and zeroes out Gram noise
    sigma = np.linalg.norm(images, axis=0)
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    cutoff = tol * (sigma[0] if sigma.size else 0.0)
    keep = min(int(np.count_nonzero(sigma > cutoff)), m * m, n * n)
    weights = sigma[:keep].copy()
    factors_a = []
    factors_b = []
    for i in range(keep):
        col = order[i]
        factors_a.append(symmetrize(np.tensordot(images[:, col] / sigma[i], basis_a, axes=1)))
        factors_b.append(symmetrize(np.tensordot(right[:, col], basis_b, axes=1)))
    return SchmidtDecomposition(
        weights=weights,
        factors_a=tuple(factors_a),
        factors_b=tuple(factors_b),
        dims=(m, n),
        dropped=int(sigma.size - keep),
    )


def partial_transpose(a, dims: Sequence[int], subsystem: str = "second") -> np.ndarray:
    """Transpose one tensor factor of a bipartite operator.

    ``second`` transposes each dim_b x dim_b block in place; ``first`` swaps
    blocks across the main block diagonal.  Applying the same transpose twice
    restores the input, and the trace is preserved.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"matrix is not square: {a.shape}")
    m, n = _check_bipartite(a.shape[0], dims)
    t = a.reshape(m, n, m, n)
    if subsystem == "second":
        t = t.transpose(0, 3, 2, 1)
    elif subsystem == "first":
        t = t.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem must be 'first' or 'second', got {subsystem!r}")
    return np.ascontiguousarray(t.reshape(m * n, m * n))


def make_density(
    a,
    dims: Sequence[int],
    tol: float = DEFAULT_TOL,
    normalize: bool = False,
) -> np.ndarray:
    """Validate (and optionally trace-normalize) a bipartite density matrix.

    Checks Hermiticity, positive semi-definiteness, and unit trace, naming
    the violated invariant and its measured residual.  With ``normalize``
    the matrix is divided by its trace (which must be positive) first.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"matrix is not square: {a.shape}")
    _check_bipartite(a.shape[0], dims)
    scale = max(1.0, frobenius_norm(a))
    residual = float(np.linalg.norm(a - a.conj().T))
    if residual > tol * scale:
        raise HermiticityError(
            f"density matrix is not Hermitian: residual {residual:.6e}"
        )
    a = symmetrize(a)
    if normalize:
        trace = float(np.trace(a).real)
        if trace <= tol:
            raise NotPsdError(f"trace must be positive to normalize, got {trace:.6e}")
        a = a / trace
    check = is_psd(a, tol)
    if not check:
        raise NotPsdError(
            f"density matrix is not PSD: min eigenvalue {check.min_eigenvalue:.6e}"
        )
    trace_residual = abs(float(np.trace(a).real) - 1.0)
    if trace_residual > tol * max(1.0, frobenius_norm(a)):
        raise DimensionError(
            f"density matrix trace differs from 1 by {trace_residual:.6e}"
        )
    return a


def ppt_check(rho, dims: Sequence[int], tol: float = DEFAULT_TOL) -> PsdCheck:
    """Positive-partial-transpose criterion for a bipartite density matrix.

    Returns is_psd of the partially transposed matrix together with its
    minimum eigenvalue; a negative minimum certifies entanglement.
    """
    rho = make_density(rho, dims, tol)
    return is_psd(partial_transpose(rho, dims, "second"), tol)


class AdditivityResiduals(NamedTuple):
    plus: float
    minus: float


def commuting_additivity_check(a, b, tol: float = DEFAULT_TOL) -> AdditivityResiduals:
    """Residuals ||(A+B)_plus - A_plus - B_plus||_F and the minus analogue.

    Requires the pair to commute.  The residuals vanish exactly when the
    eigenvalues of A and B are sign-aligned in the common eigenbasis; with
    opposite signs in one slot the parts cancel and the residual measures
    the lost mass.  Both residuals are always equal because the difference
    of the two residual matrices telescopes to (A+B) - A - B = 0.
    """
    a = require_hermitian(a, tol)
    b = require_hermitian(b, tol)
    if a.shape != b.shape:
        raise DimensionError(f"shapes differ: {a.shape} vs {b.shape}")
    check_commuting([a, b], tol)
    sa = split_pos_neg(a, tol)
    sb = split_pos_neg(b, tol)
    ssum = split_pos_neg(a + b, tol)
    return AdditivityResiduals(
        plus=frobenius_norm(ssum.plus - sa.plus - sb.plus),
        minus=frobenius_norm(ssum.minus - sa.minus - sb.minus),
    )


def commuting_family_approx(
    a_list: Sequence[np.ndarray],
    b_list: Sequence[np.ndarray],
    tol: float = DEFAULT_TOL,
    seed: int = 0,
) -> NearestPsd:
    """Term-by-term PSD approximant of sum_i a_i (x) b_i for commuting families.

    Each family is simultaneously diagonalized; the approximant is
    sum_i [a_i_plus (x) b_i_plus + a_i_minus (x) b_i_minus] and the distance
    is the Frobenius norm of the mixed-sign remainder.  The approximant is
    PSD by construction.  It coincides with the positive part of the
    assembled sum exactly when no eigenslot mixes signs across terms.
    """
    if len(a_list) != len(b_list):
        raise DimensionError(
            f"family lengths differ: {len(a_list)} vs {len(b_list)}"
        )
    if len(a_list) == 0:
        raise DimensionError("families must contain at least one pair")
    rng = np.random.default_rng(seed)
    seed_a, seed_b = (int(s) for s in rng.integers(0, 2**63, size=2))
    qa, diag_a = simultaneous_diag(a_list, tol, seed_a)
    qb, diag_b = simultaneous_diag(b_list, tol, seed_b)
    m = qa.shape[0]
    n = qb.shape[0]
    plus = np.zeros((m * n, m * n), dtype=np.complex128)
    minus = np.zeros_like(plus)
    for da, db, a, b in zip(diag_a, diag_b, a_list, b_list):
        cut_a = tol * max(1.0, frobenius_norm(a))
        cut_b = tol * max(1.0, frobenius_norm(b))
        ap = np.where(da > cut_a, da, 0.0)
        am = np.where(da < -cut_a, -da, 0.0)
        bp = np.where(db > cut_b, db, 0.0)
        bm = np.where(db < -cut_b, -db, 0.0)
        a_plus = symmetrize((qa * ap) @ qa.conj().T)
        a_minus = symmetrize((qa * am) @ qa.conj().T)
        b_plus = symmetrize((qb * bp) @ qb.conj().T)
        b_minus = symmetrize((qb * bm) @ qb.conj().T)
        plus += kron(a_plus, b_plus) + kron(a_minus, b_minus)
        minus += kron(a_plus, b_minus) + kron(a_minus, b_plus)
    return NearestPsd(symmetrize(plus), frobenius_norm(minus))


@dataclass(frozen=True)
class BoundReport:
    """Comparison of ||A - A_plus||_F against the per-term product bound.

    ``satisfied`` states lhs <= rhs + tol * scale; ``hypothesis_held``
    records whether the reconstructed operator was PSD with unit trace,
    the only regime in which the bound is asserted (where it holds
    trivially because lhs = 0).  Outside it the report is informational:
    a single term I (x) diag(1, -1) already violates the inequality.
    """

    lhs: float
    rhs: float
    satisfied: bool
    hypothesis_held: bool


def tensor_sum_bound_report(
    decomp: SchmidtDecomposition,
    tol: float = DEFAULT_TOL,
) -> BoundReport:
    """Evaluate lhs = ||A - A_plus||_F and rhs = sum_i ||B_i_minus|| ||C_i_minus||.

    A is reconstructed from the decomposition; each weight is folded into
    the left factor before splitting (a norm-neutral choice for the
    product).
    """
    a = decomp.reconstruct()
    scale = max(1.0, frobenius_norm(a))
    lhs = frobenius_norm(split_pos_neg(a, tol).minus)
    rhs = 0.0
    for w, fa, fb in zip(decomp.weights, decomp.factors_a, decomp.factors_b):
        left = split_pos_neg(w * fa, tol)
        right = split_pos_neg(fb, tol)
        rhs += frobenius_norm(left.minus) * frobenius_norm(right.minus)
    min_eig = float(hermitian_eig(a, tol).eigenvalues[-1])
    trace_residual = abs(float(np.trace(a).real) - 1.0)
    hypothesis = min_eig >= -tol * scale and trace_residual <= tol * scale
    return BoundReport(
        lhs=lhs,
        rhs=rhs,
        satisfied=lhs <= rhs + tol * scale,
        hypothesis_held=hypothesis,
    )
