import numpy as np
import pytest

from psdkit import (
    DimensionError,
    HermiticityError,
    NonCommutingError,
    NotPsdError,
    SchmidtDecomposition,
    commuting_additivity_check,
    commuting_family_approx,
    frobenius_norm,
    hermitian_basis,
    hermitian_eig,
    is_psd,
    kron,
    make_density,
    nearest_psd_tensor,
    operator_schmidt,
    partial_transpose,
    ppt_check,
    split_pos_neg,
    tensor_split,
    tensor_sum_bound_report,
)
from psdkit.rand import (
    random_commuting_family,
    random_density,
    random_givens_unitary,
    random_hermitian,
    random_psd,
)

X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
Z = np.diag([1.0, -1.0]).astype(complex)

BELL = 0.5 * np.array(
    [[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]], dtype=complex
)
SINGLET = 0.5 * np.array(
    [[0, 0, 0, 0], [0, 1, -1, 0], [0, -1, 1, 0], [0, 0, 0, 0]], dtype=complex
)


def werner(p: float) -> np.ndarray:
    return p * SINGLET + (1.0 - p) * np.eye(4) / 4.0


def pt_reference(a, m, n, subsystem):
    out = np.zeros_like(np.asarray(a, dtype=complex))
    for i in range(m):
        for j in range(n):
            for k in range(m):
                for l in range(n):
                    if subsystem == "second":
                        out[i * n + j, k * n + l] = a[i * n + l, k * n + j]
                    else:
                        out[i * n + j, k * n + l] = a[k * n + j, i * n + l]
    return out


def test_tensor_split_diagonal_example():
    d = np.diag([1.0, -1.0])
    parts = tensor_split(d, d)
    np.testing.assert_allclose(parts.plus, np.diag([1.0, 0.0, 0.0, 1.0]))
    np.testing.assert_allclose(parts.minus, np.diag([0.0, 1.0, 1.0, 0.0]))
    assert parts.signature == (2, 2, 0)


def test_tensor_split_psd_factors_have_zero_minus():
    rng = np.random.default_rng(4)
    parts = tensor_split(random_psd(2, rng), random_psd(3, rng))
    assert frobenius_norm(parts.minus) <= 1e-9


def test_tensor_split_matches_direct_split():
    rng = np.random.default_rng(21)
    for _ in range(25):
        b = random_hermitian(2, rng)
        c = random_hermitian(3, rng)
        via_factors = tensor_split(b, c)
        direct = split_pos_neg(kron(b, c))
        scale = max(1.0, frobenius_norm(kron(b, c)))
        assert frobenius_norm(via_factors.plus - direct.plus) <= 1e-10 * scale
        assert frobenius_norm(via_factors.minus - direct.minus) <= 1e-10 * scale
        assert via_factors.signature == direct.signature


def test_nearest_psd_tensor_values():
    d = np.diag([1.0, -1.0])
    assert nearest_psd_tensor(d, d).distance == pytest.approx(np.sqrt(2.0))
    assert nearest_psd_tensor(d, np.eye(2)).distance == pytest.approx(np.sqrt(2.0))
    rng = np.random.default_rng(3)
    assert nearest_psd_tensor(random_psd(2, rng), random_psd(2, rng)).distance <= 1e-9


def test_nearest_psd_tensor_lower_bound():
    rng = np.random.default_rng(54)
    b = random_hermitian(2, rng)
    c = random_hermitian(3, rng)
    target = kron(b, c)
    distance = nearest_psd_tensor(b, c).distance
    for _ in range(100):
        candidate = random_psd(6, rng)
        assert frobenius_norm(target - candidate) >= distance - 1e-9


@pytest.mark.parametrize("d", [2, 3, 4])
def test_hermitian_basis_orthonormal(d):
    basis = hermitian_basis(d)
    assert basis.shape == (d * d, d, d)
    for i in range(d * d):
        assert frobenius_norm(basis[i] - basis[i].conj().T) <= 1e-14
        for j in range(d * d):
            inner = float(np.trace(basis[i] @ basis[j]).real)
            assert inner == pytest.approx(1.0 if i == j else 0.0, abs=1e-13)


def test_operator_schmidt_product_input():
    rng = np.random.default_rng(8)
    sigma = random_hermitian(2, rng)
    tau = random_hermitian(3, rng)
    decomp = operator_schmidt(kron(sigma, tau), (2, 3))
    assert decomp.nterms == 1
    assert decomp.weights[0] == pytest.approx(
        frobenius_norm(sigma) * frobenius_norm(tau), abs=1e-10
    )


def test_operator_schmidt_bell_state():
    decomp = operator_schmidt(BELL, (2, 2))
    np.testing.assert_allclose(decomp.weights, [0.5, 0.5, 0.5, 0.5], atol=1e-8)
    assert frobenius_norm(decomp.reconstruct() - BELL) <= 1e-10


def test_operator_schmidt_maximally_mixed():
    decomp = operator_schmidt(np.eye(4) / 4.0, (2, 2))
    assert decomp.nterms == 1
    assert decomp.weights[0] == pytest.approx(0.5, abs=1e-12)


def test_operator_schmidt_round_trip_and_orthonormality():
    rng = np.random.default_rng(33)
    for dims in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        m, n = dims
        a = random_hermitian(m * n, rng)
        decomp = operator_schmidt(a, dims)
        assert decomp.nterms <= min(m * m, n * n)
        scale = max(1.0, frobenius_norm(a))
        assert frobenius_norm(decomp.reconstruct() - a) <= 1e-9 * scale
        assert np.all(np.diff(decomp.weights) <= 1e-12)
        for fams in (decomp.factors_a, decomp.factors_b):
            for i, fi in enumerate(fams):
                assert frobenius_norm(fi - fi.conj().T) <= 1e-9
                for j, fj in enumerate(fams):
                    inner = float(np.trace(fi @ fj).real)
                    assert inner == pytest.approx(1.0 if i == j else 0.0, abs=1e-9)


def test_operator_schmidt_weights_local_unitary_invariant():
    rng = np.random.default_rng(44)
    a = random_hermitian(6, rng)
    base = operator_schmidt(a, (2, 3)).weights
    u = random_givens_unitary(2, rng)
    v = random_givens_unitary(3, rng)
    w = kron(u, v)
    rotated = operator_schmidt(w @ a @ w.conj().T, (2, 3), ).weights
    np.testing.assert_allclose(base, rotated, atol=1e-8)


def test_operator_schmidt_dimension_mismatch():
    with pytest.raises(DimensionError):
        operator_schmidt(np.eye(4), (2, 3))


def test_partial_transpose_basics():
    d = np.diag([1.0, 2.0, 3.0, 4.0])
    np.testing.assert_allclose(partial_transpose(d, (2, 2)), d)
    quarter = np.eye(4) / 4.0
    np.testing.assert_allclose(partial_transpose(quarter, (2, 2)), quarter)
    pt = partial_transpose(BELL, (2, 2))
    assert hermitian_eig(pt).eigenvalues[-1] == pytest.approx(-0.5, abs=1e-12)


def test_partial_transpose_matches_reference():
    rng = np.random.default_rng(61)
    for dims in [(2, 2), (2, 3), (3, 2)]:
        m, n = dims
        a = rng.normal(size=(m * n, m * n)) + 1j * rng.normal(size=(m * n, m * n))
        for subsystem in ("first", "second"):
            got = partial_transpose(a, dims, subsystem)
            np.testing.assert_allclose(got, pt_reference(a, m, n, subsystem))


def test_partial_transpose_involution_trace_and_transpose():
    rng = np.random.default_rng(62)
    a = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    for subsystem in ("first", "second"):
        pt = partial_transpose(a, (2, 3), subsystem)
        np.testing.assert_allclose(partial_transpose(pt, (2, 3), subsystem), a)
        assert np.trace(pt) == pytest.approx(np.trace(a))
        np.testing.assert_allclose(
            partial_transpose(a.T, (2, 3), subsystem),
            partial_transpose(a, (2, 3), subsystem).T,
        )


def test_partial_transpose_rejects_bad_dims():
    with pytest.raises(DimensionError):
        partial_transpose(np.eye(4), (2, 3))
    with pytest.raises(ValueError):
        partial_transpose(np.eye(4), (2, 2), "third")


def test_ppt_product_state_passes():
    rng = np.random.default_rng(10)
    rho = kron(random_density(2, rng), random_density(3, rng))
    check = ppt_check(rho, (2, 3))
    assert check.is_psd
    assert check.min_eigenvalue >= -1e-12


def test_ppt_bell_state_fails():
    check = ppt_check(BELL, (2, 2))
    assert not check.is_psd
    assert check.min_eigenvalue == pytest.approx(-0.5, abs=1e-12)


@pytest.mark.parametrize("p", [0.0, 0.2, 1.0 / 3.0, 0.5, 0.9, 1.0])
def test_ppt_werner_closed_form(p):
    check = ppt_check(werner(p), (2, 2))
    assert check.min_eigenvalue == pytest.approx((1.0 - 3.0 * p) / 4.0, abs=1e-12)
    assert check.is_psd == (p <= 1.0 / 3.0 + 1e-9)


def test_make_density_validation():
    np.testing.assert_allclose(make_density(np.eye(4) / 4.0, (2, 2)), np.eye(4) / 4.0)
    np.testing.assert_allclose(
        make_density(np.eye(4), (2, 2), normalize=True), np.eye(4) / 4.0
    )
    with pytest.raises(NotPsdError, match="min eigenvalue"):
        make_density(np.diag([1.0, -0.1, 0.05, 0.05]), (2, 2))
    with pytest.raises(HermiticityError):
        make_density(np.triu(np.ones((4, 4))), (2, 2))
    with pytest.raises(DimensionError, match="trace"):
        make_density(np.eye(4) / 2.0, (2, 2))
    with pytest.raises(NotPsdError, match="trace must be positive"):
        make_density(np.zeros((4, 4)), (2, 2), normalize=True)


def test_additivity_scaled_pair_is_exact():
    a = random_hermitian(4, np.random.default_rng(2))
    res = commuting_additivity_check(a, 2.0 * a)
    assert res.plus <= 1e-9
    assert res.minus <= 1e-9


def test_additivity_diagonal_pair_with_sign_flip():
    # the commuting pair diag(1,-1), diag(-2,3) mixes signs per slot, so the
    # parts do not add: (A+B)_plus = diag(0,2) while A_plus + B_plus = diag(1,3)
    a = np.diag([1.0, -1.0])
    b = np.diag([-2.0, 3.0])
    parts = split_pos_neg(a + b)
    np.testing.assert_allclose(parts.plus, np.diag([0.0, 2.0]))
    res = commuting_additivity_check(a, b)
    assert res.plus == pytest.approx(np.sqrt(2.0))
    assert res.minus == pytest.approx(np.sqrt(2.0))


def test_additivity_sign_aligned_family_is_exact():
    rng = np.random.default_rng(14)
    for trial in range(25):
        n = int(rng.integers(2, 6))
        a, b = random_commuting_family(n, 2, rng)
        res = commuting_additivity_check(a, b)
        assert res.plus <= 1e-9
        assert res.minus <= 1e-9


def test_additivity_loewner_inequality_for_commuting_pairs():
    # the actual lemma: (A+B)_plus <= A_plus + B_plus in the Loewner order
    rng = np.random.default_rng(16)
    for _ in range(25):
        n = int(rng.integers(2, 6))
        a, b = random_commuting_family(n, 2, rng, sign_aligned=False)
        gap = split_pos_neg(a).plus + split_pos_neg(b).plus - split_pos_neg(a + b).plus
        assert hermitian_eig(gap).eigenvalues[-1] >= -1e-9


def test_additivity_rejects_non_commuting():
    with pytest.raises(NonCommutingError):
        commuting_additivity_check(X, Z)


def test_additivity_residual_nonvacuous_on_non_commuting_pair():
    # computed directly from splits since the checker rejects the pair
    residual = frobenius_norm(
        split_pos_neg(X + Z).plus - split_pos_neg(X).plus - split_pos_neg(Z).plus
    )
    assert residual > 0.1
    assert residual == pytest.approx(np.sqrt(2.0) - 1.0, abs=1e-12)


def test_commuting_family_approx_single_pair():
    rng = np.random.default_rng(18)
    a = random_hermitian(2, rng)
    b = random_hermitian(3, rng)
    family = commuting_family_approx([a], [b])
    direct = nearest_psd_tensor(a, b)
    np.testing.assert_allclose(family.approximant, direct.approximant, atol=1e-10)
    assert family.distance == pytest.approx(direct.distance, abs=1e-10)


def test_commuting_family_approx_diagonal_families_entrywise():
    a_list = [np.diag([1.0, -1.0]), np.diag([2.0, 0.0])]
    b_list = [np.diag([1.0, 1.0]), np.diag([0.0, -1.0])]
    result = commuting_family_approx(a_list, b_list)
    # slot products: term 1 gives (1,1,-1,-1); term 2 gives (0,-2,0,0)
    np.testing.assert_allclose(result.approximant, np.diag([1.0, 1.0, 0.0, 0.0]), atol=1e-12)
    assert result.distance == pytest.approx(np.sqrt(6.0))
    assert is_psd(result.approximant)


def test_commuting_family_approx_matches_direct_split_when_sign_aligned():
    rng = np.random.default_rng(52)
    for trial in range(15):
        size = int(rng.integers(1, 4))
        m = int(rng.integers(2, 4))
        n = int(rng.integers(2, 4))
        a_list = random_commuting_family(m, size, rng)
        b_list = random_commuting_family(n, size, rng)
        result = commuting_family_approx(a_list, b_list, seed=trial)
        total = sum(kron(a, b) for a, b in zip(a_list, b_list))
        direct = split_pos_neg(total)
        scale = max(1.0, frobenius_norm(total))
        assert frobenius_norm(result.approximant - direct.plus) <= 1e-9 * scale
        assert abs(result.distance - frobenius_norm(direct.minus)) <= 1e-9 * scale
        assert is_psd(result.approximant)


def test_commuting_family_approx_rejects_non_commuting():
    with pytest.raises(NonCommutingError):
        commuting_family_approx([X, Z], [np.eye(2), np.eye(2)])
    with pytest.raises(DimensionError):
        commuting_family_approx([X], [])


def test_bound_report_density_input_trivially_satisfied():
    rng = np.random.default_rng(71)
    rho = random_density(6, rng)
    report = tensor_sum_bound_report(operator_schmidt(rho, (2, 3)))
    assert report.lhs <= 1e-9
    assert report.satisfied
    assert report.hypothesis_held


def test_bound_report_counterexample_without_density_hypothesis():
    # single product term I (x) diag(1, -1): lhs = sqrt(2) but rhs = 0
    a = kron(np.eye(2), np.diag([1.0, -1.0]))
    report = tensor_sum_bound_report(operator_schmidt(a, (2, 2)))
    assert report.lhs == pytest.approx(np.sqrt(2.0), abs=1e-9)
    assert report.rhs == pytest.approx(0.0, abs=1e-9)
    assert not report.satisfied
    assert not report.hypothesis_held


def test_bound_report_bell_state():
    report = tensor_sum_bound_report(operator_schmidt(BELL, (2, 2)))
    assert report.lhs <= 1e-9
    assert report.satisfied
    assert report.hypothesis_held


def test_bound_report_hand_built_decomposition():
    # weights folded into the left factor: rhs must match either placement
    sigma = np.sqrt(2.0) * 2.0
    decomp = SchmidtDecomposition(
        weights=np.array([sigma]),
        factors_a=(np.eye(2, dtype=complex) / np.sqrt(2.0),),
        factors_b=(np.diag([1.0, -1.0]).astype(complex) / np.sqrt(2.0),),
        dims=(2, 2),
    )
    report = tensor_sum_bound_report(decomp)
    assert report.lhs == pytest.approx(2.0, abs=1e-9)
    assert report.rhs == pytest.approx(0.0, abs=1e-12)
