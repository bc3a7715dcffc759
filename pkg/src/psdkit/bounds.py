"""Weyl and Horn eigenvalue inequalities for spectra of Hermitian sums.

The index triples (I, J, K) are enumerated recursively: U_r^n collects the
size-r subsets whose element sums satisfy |I| + |J| = |K| + r(r+1)/2, and
T_r^n keeps the triples of U_r^n that pass every lower-order inequality over
index positions, quantified by (F, G, H) in T_p^r for all p < r.  All weight
arithmetic is integral, so membership needs no tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import DimensionError
from .linalg import DEFAULT_TOL, hermitian_eig
from .rand import random_givens_unitary

MAX_HORN_DIM = 6

Triple = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class HornTripleSet:
    n: int
    r: int
    triples: tuple[Triple, ...]

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)


@dataclass(frozen=True)
class SpectrumTriple:
    """Candidate spectra (alpha, beta, gamma), each sorted descending."""

    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray

    @property
    def n(self) -> int:
        return len(self.alpha)


@dataclass(frozen=True)
class Violation:
    r: int
    triple: Triple
    form: str  # "upper" for <=, "lower" for the complementary >=
    lhs: float
    rhs: float
    slack: float


@dataclass(frozen=True)
class InequalityReport:
    checked: int
    violations: tuple[Violation, ...]
    trace_residual: float

    def ok(self, tol: float = DEFAULT_TOL) -> bool:
        return not self.violations and self.trace_residual <= tol


@lru_cache(maxsize=None)
def _u_triples(n: int, r: int) -> tuple[Triple, ...]:
    subsets = list(combinations(range(1, n + 1), r))
    shift = r * (r + 1) // 2
    out = []
    for i_set in subsets:
        wi = sum(i_set)
        for j_set in subsets:
            wij = wi + sum(j_set)
            for k_set in subsets:
                if wij == sum(k_set) + shift:
                    out.append((i_set, j_set, k_set))
    return tuple(out)


@lru_cache(maxsize=None)
def _t_triples(n: int, r: int) -> tuple[Triple, ...]:
    if r == 1:
        return _u_triples(n, 1)
    inner = [
        (p, _t_triples(r, p)) for p in range(1, r)
    ]
    out = []
    for i_set, j_set, k_set in _u_triples(n, r):
        admissible = True
        for p, triples in inner:
            shift = p * (p + 1) // 2
            for f_set, g_set, h_set in triples:
                lhs = sum(i_set[f - 1] for f in f_set) + sum(j_set[g - 1] for g in g_set)
                if lhs > sum(k_set[h - 1] for h in h_set) + shift:
                    admissible = False
                    break
            if not admissible:
                break
        if admissible:
            out.append((i_set, j_set, k_set))
    return tuple(out)


def horn_sets(n: int, r: int) -> HornTripleSet:
    """The triple set T_r^n, enumerated deterministically in lexicographic order.

    Guarded to 1 <= r < n <= 6; the sets grow combinatorially beyond that.
    """
    if not 1 <= r < n:
        raise DimensionError(f"need 1 <= r < n, got r={r}, n={n}")
    if n > MAX_HORN_DIM:
        raise DimensionError(f"n={n} exceeds the enumeration cap {MAX_HORN_DIM}")
    return HornTripleSet(n, r, _t_triples(n, r))


def _require_sorted(name: str, values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionError(f"{name} must be a nonempty 1-D sequence")
    if not np.all(np.isfinite(arr)):
        raise DimensionError(f"{name} contains non-finite entries")
    if np.any(np.diff(arr) > 0.0):
        raise DimensionError(f"{name} must be sorted descending")
    return arr


def spectrum_triple(alpha, beta, gamma) -> SpectrumTriple:
    """Validate lengths, finiteness, and descending order of a triple."""
    a = _require_sorted("alpha", alpha)
    b = _require_sorted("beta", beta)
    g = _require_sorted("gamma", gamma)
    if not (len(a) == len(b) == len(g)):
        raise DimensionError(
            f"lengths differ: alpha {len(a)}, beta {len(b)}, gamma {len(g)}"
        )
    return SpectrumTriple(a, b, g)


def _complement(subset: tuple[int, ...], n: int) -> tuple[int, ...]:
    inside = set(subset)
    return tuple(x for x in range(1, n + 1) if x not in inside)


def _sum_at(values: np.ndarray, subset: tuple[int, ...]) -> float:
    return float(sum(values[i - 1] for i in subset))


def horn_check(t: SpectrumTriple, tol: float = DEFAULT_TOL) -> InequalityReport:
    """Check the trace identity and every Horn inequality for all r < n.

    For each triple the upper form sum_K gamma <= sum_I alpha + sum_J beta
    and the complementary lower form over the complements are evaluated;
    violations (slack < -tol) are reported with their slack.
    """
    n = t.n
    if n > MAX_HORN_DIM:
        raise DimensionError(f"n={n} exceeds the enumeration cap {MAX_HORN_DIM}")
    trace_residual = abs(
        float(np.sum(t.alpha)) + float(np.sum(t.beta)) - float(np.sum(t.gamma))
    )
    checked = 0
    violations = []
    for r in range(1, n):
        for triple in _t_triples(n, r):
            i_set, j_set, k_set = triple
            lhs = _sum_at(t.gamma, k_set)
            rhs = _sum_at(t.alpha, i_set) + _sum_at(t.beta, j_set)
            checked += 1
            if rhs - lhs < -tol:
                violations.append(
                    Violation(r, triple, "upper", lhs, rhs, rhs - lhs)
                )
            lo_lhs = _sum_at(t.gamma, _complement(k_set, n))
            lo_rhs = _sum_at(t.alpha, _complement(i_set, n)) + _sum_at(
                t.beta, _complement(j_set, n)
            )
            checked += 1
            if lo_lhs - lo_rhs < -tol:
                violations.append(
                    Violation(r, triple, "lower", lo_lhs, lo_rhs, lo_lhs - lo_rhs)
                )
    return InequalityReport(checked, tuple(violations), trace_residual)


def weyl_check(t: SpectrumTriple, tol: float = DEFAULT_TOL) -> InequalityReport:
    """Weyl's inequalities gamma_{i+j-1} <= alpha_i + beta_j.

    Exactly the r = 1 upper-form subset of horn_check, but with no cap on n.
    """
    n = t.n
    trace_residual = abs(
        float(np.sum(t.alpha)) + float(np.sum(t.beta)) - float(np.sum(t.gamma))
    )
    checked = 0
    violations = []
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            k = i + j - 1
            lhs = float(t.gamma[k - 1])
            rhs = float(t.alpha[i - 1]) + float(t.beta[j - 1])
            checked += 1
            if rhs - lhs < -tol:
                violations.append(
                    Violation(1, ((i,), (j,), (k,)), "upper", lhs, rhs, rhs - lhs)
                )
    return InequalityReport(checked, tuple(violations), trace_residual)


def practical_bounds(alpha, beta) -> list[tuple[float, float]]:
    """Per-position envelopes for the spectrum of a sum.

    Interval k is [max_{i+j=n+k} alpha_i + beta_j, min_{i+j=k+1} alpha_i + beta_j];
    every spectrum of an actual sum lands inside.
    """
    a = _require_sorted("alpha", alpha)
    b = _require_sorted("beta", beta)
    if len(a) != len(b):
        raise DimensionError(f"lengths differ: alpha {len(a)}, beta {len(b)}")
    n = len(a)
    intervals = []
    for k in range(1, n + 1):
        lo = max(a[i - 1] + b[n + k - i - 1] for i in range(k, n + 1))
        hi = min(a[i - 1] + b[k - i] for i in range(1, k + 1))
        intervals.append((float(lo), float(hi)))
    return intervals


def sum_spectrum_oracle(
    alpha,
    beta,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    rotate: bool = True,
) -> SpectrumTriple:
    """Spectrum of an explicit random sum with the prescribed summand spectra.

    Builds A = U diag(alpha) U^dagger and B = V diag(beta) V^dagger with
    independent seeded random unitaries (products of complex Givens
    rotations) and returns (sorted alpha, sorted beta, spectrum of A + B).
    The result satisfies every Horn inequality by construction.
    ``rotate=False`` keeps both summands diagonal, honoring the given
    diagonal order.
    """
    a = np.asarray(alpha, dtype=np.float64)
    b = np.asarray(beta, dtype=np.float64)
    for name, arr in (("alpha", a), ("beta", b)):
        if arr.ndim != 1 or arr.size == 0 or not np.all(np.isfinite(arr)):
            raise DimensionError(f"{name} must be a nonempty finite 1-D sequence")
    if len(a) != len(b):
        raise DimensionError(f"lengths differ: alpha {len(a)}, beta {len(b)}")
    n = len(a)
    rng = np.random.default_rng(seed)
    if rotate:
        u = random_givens_unitary(n, rng)
        v = random_givens_unitary(n, rng)
    else:
        u = np.eye(n, dtype=np.complex128)
        v = np.eye(n, dtype=np.complex128)
    mat_a = (u * a) @ u.conj().T
    mat_b = (v * b) @ v.conj().T
    gamma = hermitian_eig(mat_a + mat_b, tol).eigenvalues
    return SpectrumTriple(np.sort(a)[::-1], np.sort(b)[::-1], gamma)
