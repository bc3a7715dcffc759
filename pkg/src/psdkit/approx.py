"""Positive/negative spectral splitting and the exact nearest-PSD approximation.

For Hermitian A with eigenvalues w, the split uses w_plus = (|w| + w)/2 and
w_minus = (|w| - w)/2 in the eigenbasis, so A = A_plus - A_minus with both
parts PSD and supported on disjoint eigenvector sets.  A_plus is the closest
PSD matrix to A in the Frobenius norm and the distance is ||A_minus||_F.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NotPsdError
from .linalg import (
    DEFAULT_TOL,
    Signature,
    Spectrum,
    as_matrix,
    frobenius_norm,
    hermitian_eig,
    require_hermitian,
    symmetrize,
)


@dataclass(frozen=True)
class PosNegParts:
    """The pair (A_plus, A_minus) with disjoint eigen-supports."""

    plus: np.ndarray
    minus: np.ndarray
    signature: Signature

    def reconstruct(self) -> np.ndarray:
        return self.plus - self.minus


class NearestPsd(NamedTuple):
    approximant: np.ndarray
    distance: float


@dataclass(frozen=True)
class PsdCheck:
    is_psd: bool
    min_eigenvalue: float

    def __bool__(self) -> bool:
        return self.is_psd


@dataclass(frozen=True)
class SlackReport:
    """Diagnostic for an alternative PSD decomposition A = P - N.

    ``slack_min_eig`` is the smallest eigenvalue of P - A_plus.  No sign is
    asserted: the Loewner order is not a lattice, so P need not dominate
    A_plus when P does not commute with A.
    """

    n_is_psd: bool
    slack_min_eig: float


def _split_values(spectrum: Spectrum, zero_cut: float) -> tuple[np.ndarray, np.ndarray]:
    vals = spectrum.eigenvalues
    plus = np.where(vals > zero_cut, vals, 0.0)
    minus = np.where(vals < -zero_cut, -vals, 0.0)
    return plus, minus


def split_pos_neg(a, tol: float = DEFAULT_TOL) -> PosNegParts:
    """Split Hermitian A into PSD parts A_plus - A_minus.

    Eigenvalues within tol * max(1, ||A||_F) of zero contribute to neither
    part; they are counted in the zero slot of the signature.
    """
    spectrum = hermitian_eig(a, tol)
    zero_cut = tol * max(1.0, frobenius_norm(a))
    wp, wm = _split_values(spectrum, zero_cut)
    q = spectrum.vectors
    plus = symmetrize((q * wp) @ q.conj().T)
    minus = symmetrize((q * wm) @ q.conj().T)
    return PosNegParts(plus, minus, spectrum.signature)


def nearest_psd(a, tol: float = DEFAULT_TOL) -> NearestPsd:
    """Closest PSD matrix to Hermitian A and the Frobenius distance to it.

    The approximant is A_plus; the distance equals ||A_minus||_F, computed
    from the negative eigenvalues directly.
    """
    spectrum = hermitian_eig(a, tol)
    zero_cut = tol * max(1.0, frobenius_norm(a))
    wp, wm = _split_values(spectrum, zero_cut)
    q = spectrum.vectors
    approximant = symmetrize((q * wp) @ q.conj().T)
    return NearestPsd(approximant, float(np.sqrt(np.sum(wm * wm))))


def is_psd(a, tol: float = DEFAULT_TOL) -> PsdCheck:
    """Whether all eigenvalues clear -tol * max(1, ||A||_F); reports the minimum."""
    spectrum = hermitian_eig(a, tol)
    min_eig = float(spectrum.eigenvalues[-1])
    return PsdCheck(min_eig >= -tol * max(1.0, frobenius_norm(a)), min_eig)


def _require_psd(a, tol: float, name: str) -> np.ndarray:
    a = require_hermitian(a, tol)
    check = is_psd(a, tol)
    if not check:
        raise NotPsdError(
            f"{name} is not positive semi-definite: "
            f"min eigenvalue {check.min_eigenvalue:.6e}"
        )
    return a


def optimality_gap(a, b, tol: float = DEFAULT_TOL) -> float:
    """||A - B||_F - ||A_minus||_F for a PSD candidate B.

    Non-negative (up to tol) for every PSD B, and zero exactly at
    B = A_plus; a non-PSD B violates the hypothesis and is rejected.
    """
    a = require_hermitian(a, tol)
    b = _require_psd(b, tol, "candidate")
    _, distance = nearest_psd(a, tol)
    return frobenius_norm(a - b) - distance


def psd_product_min_eig(a, b, tol: float = DEFAULT_TOL) -> float:
    """Minimum eigenvalue of AB for PSD A, B; non-negative up to tol.

    The eigenvalues of AB equal those of the Hermitian similarity
    A^(1/2) B A^(1/2), so only the Hermitian eigensolver is needed.
    """
    a = _require_psd(a, tol, "first factor")
    b = _require_psd(b, tol, "second factor")
    if a.shape != b.shape:
        raise NotPsdError(f"factor shapes differ: {a.shape} vs {b.shape}")
    spectrum = hermitian_eig(a, tol)
    root_vals = np.sqrt(np.maximum(spectrum.eigenvalues, 0.0))
    q = spectrum.vectors
    root = (q * root_vals) @ q.conj().T
    product = symmetrize(root @ b @ root)
    return float(hermitian_eig(product, tol).eigenvalues[-1])


def decomposition_slack(a, p, tol: float = DEFAULT_TOL) -> SlackReport:
    """Measure min eig of P - A_plus for a valid PSD decomposition A = P - N.

    Requires P and N = P - A to be PSD; the error message names whichever
    precondition fails.  Diagnostic only - see SlackReport.
    """
    a = require_hermitian(a, tol)
    p = _require_psd(p, tol, "p")
    n_check = is_psd(as_matrix(p) - a, tol)
    if not n_check:
        raise NotPsdError(
            "p - a is not positive semi-definite: "
            f"min eigenvalue {n_check.min_eigenvalue:.6e}"
        )
    plus = split_pos_neg(a, tol).plus
    slack_min = float(hermitian_eig(symmetrize(p - plus), tol).eigenvalues[-1])
    return SlackReport(n_is_psd=bool(n_check), slack_min_eig=slack_min)
