"""psdkit: exact nearest-PSD approximation of Hermitian matrices.

Library plus CLI for positive/negative spectral splits, tensor-product and
commuting-sum variants of the nearest-PSD problem, bipartite density-matrix
separability machinery (operator-Schmidt, partial transpose, PPT), and
Horn/Weyl eigenvalue bounds for sums.
"""

__version__ = "0.1.0"

from .approx import (
    NearestPsd,
    PosNegParts,
    PsdCheck,
    SlackReport,
    decomposition_slack,
    is_psd,
    nearest_psd,
    optimality_gap,
    psd_product_min_eig,
    split_pos_neg,
)
from .bounds import (
    HornTripleSet,
    InequalityReport,
    SpectrumTriple,
    Violation,
    horn_check,
    horn_sets,
    practical_bounds,
    spectrum_triple,
    sum_spectrum_oracle,
    weyl_check,
)
from .errors import (
    ConvergenceError,
    DimensionError,
    HermiticityError,
    MatrixFormatError,
    NonCommutingError,
    NotPsdError,
    PsdkitError,
)
from .io import MatrixFile, load_matrix, parse_matrix, save_matrix, serialize_matrix
from .linalg import (
    DEFAULT_TOL,
    Signature,
    Spectrum,
    as_matrix,
    commutator_residual,
    dagger,
    frobenius_norm,
    hermitian_eig,
    hermiticity_residual,
    kron,
    matmul,
    require_hermitian,
    simultaneous_diag,
    symmetrize,
)
from .tensor import (
    AdditivityResiduals,
    BoundReport,
    SchmidtDecomposition,
    commuting_additivity_check,
    commuting_family_approx,
    hermitian_basis,
    make_density,
    nearest_psd_tensor,
    operator_schmidt,
    partial_transpose,
    ppt_check,
    tensor_split,
    tensor_sum_bound_report,
)

__all__ = [
    "__version__",
    "DEFAULT_TOL",
    "AdditivityResiduals",
    "BoundReport",
    "ConvergenceError",
    "DimensionError",
    "HermiticityError",
    "HornTripleSet",
    "InequalityReport",
    "MatrixFile",
    "MatrixFormatError",
    "NearestPsd",
    "NonCommutingError",
    "NotPsdError",
    "PosNegParts",
    "PsdCheck",
    "PsdkitError",
    "SchmidtDecomposition",
    "Signature",
    "SlackReport",
    "Spectrum",
    "SpectrumTriple",
    "Violation",
    "as_matrix",
    "commutator_residual",
    "commuting_additivity_check",
    "commuting_family_approx",
    "dagger",
    "decomposition_slack",
    "frobenius_norm",
    "hermitian_basis",
    "hermitian_eig",
    "hermiticity_residual",
    "horn_check",
    "horn_sets",
    "is_psd",
    "kron",
    "load_matrix",
    "make_density",
    "matmul",
    "nearest_psd",
    "nearest_psd_tensor",
    "operator_schmidt",
    "optimality_gap",
    "parse_matrix",
    "partial_transpose",
    "ppt_check",
    "practical_bounds",
    "psd_product_min_eig",
    "require_hermitian",
    "save_matrix",
    "serialize_matrix",
    "simultaneous_diag",
    "spectrum_triple",
    "split_pos_neg",
    "sum_spectrum_oracle",
    "symmetrize",
    "tensor_split",
    "tensor_sum_bound_report",
    "weyl_check",
]
