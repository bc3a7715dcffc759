"""Command-line front end: subcommand dispatch and report emission.

Exit codes: 0 success, 1 a check reported a violation (PPT fails, an
inequality is broken, a matrix is not PSD, a bound is unsatisfied),
2 input or usage error.  Reports go to stdout, diagnostics to stderr.
With --format json the output is byte-identical across runs for identical
arguments, files, and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .approx import is_psd, nearest_psd, split_pos_neg
from .bounds import (
    horn_check,
    horn_sets,
    practical_bounds,
    spectrum_triple,
    sum_spectrum_oracle,
    weyl_check,
)
from .errors import MatrixFormatError, PsdkitError
from .io import load_matrix, matrix_to_obj
from .linalg import DEFAULT_TOL, simultaneous_diag, symmetrize
from .tensor import (
    commuting_family_approx,
    nearest_psd_tensor,
    operator_schmidt,
    partial_transpose,
    ppt_check,
    tensor_split,
    tensor_sum_bound_report,
)


def _eig_list(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad eigenvalue list {text!r}: {exc}")
    if not values:
        raise argparse.ArgumentTypeError("eigenvalue list is empty")
    # convenience input is sorted here; library layers require sorted
    return sorted(values, reverse=True)


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"tol must be positive, got {text}")
    return value


def _load(args, attr="infile"):
    path = getattr(args, attr)
    doc = load_matrix(path)
    matrix = doc.matrix
    if getattr(args, "symmetrize", False) and matrix.shape[0] == matrix.shape[1]:
        matrix = symmetrize(matrix)
    return matrix, doc.dims


def _resolve_dims(args, file_dims, side: int) -> tuple[int, int]:
    if args.dims is not None:
        return int(args.dims[0]), int(args.dims[1])
    if file_dims is not None:
        return file_dims
    raise MatrixFormatError(
        f"no bipartite dims given for a {side}x{side} matrix; pass --dims M N"
    )


def _signature_obj(signature) -> dict:
    return {
        "positive": signature.positive,
        "negative": signature.negative,
        "zero": signature.zero,
    }


def _violations_obj(report) -> list[dict]:
    out = []
    for v in report.violations:
        out.append(
            {
                "r": v.r,
                "i": list(v.triple[0]),
                "j": list(v.triple[1]),
                "k": list(v.triple[2]),
                "form": v.form,
                "lhs": v.lhs,
                "rhs": v.rhs,
                "slack": v.slack,
            }
        )
    return out


def _cmd_split(args):
    matrix, _ = _load(args)
    parts = split_pos_neg(matrix, args.tol)
    return 0, {
        "command": "split",
        "signature": _signature_obj(parts.signature),
        "plus": matrix_to_obj(parts.plus),
        "minus": matrix_to_obj(parts.minus),
    }


def _cmd_nearest_psd(args):
    matrix, _ = _load(args)
    approximant, distance = nearest_psd(matrix, args.tol)
    return 0, {
        "command": "nearest-psd",
        "approximant": matrix_to_obj(approximant),
        "distance": distance,
    }


def _cmd_is_psd(args):
    matrix, _ = _load(args)
    check = is_psd(matrix, args.tol)
    code = 0 if check.is_psd else 1
    return code, {
        "command": "is-psd",
        "is_psd": check.is_psd,
        "min_eigenvalue": check.min_eigenvalue,
    }


def _cmd_tensor_split(args):
    b, _ = _load(args, "infile")
    c, _ = _load(args, "infile2")
    parts = tensor_split(b, c, args.tol)
    return 0, {
        "command": "tensor-split",
        "signature": _signature_obj(parts.signature),
        "plus": matrix_to_obj(parts.plus),
        "minus": matrix_to_obj(parts.minus),
    }


def _cmd_tensor_nearest(args):
    b, _ = _load(args, "infile")
    c, _ = _load(args, "infile2")
    approximant, distance = nearest_psd_tensor(b, c, args.tol)
    return 0, {
        "command": "tensor-nearest",
        "approximant": matrix_to_obj(approximant),
        "distance": distance,
    }


def _cmd_schmidt(args):
    matrix, file_dims = _load(args)
    dims = _resolve_dims(args, file_dims, matrix.shape[0])
    decomp = operator_schmidt(matrix, dims, args.tol)
    return 0, {
        "command": "schmidt",
        "dims": list(decomp.dims),
        "weights": [float(w) for w in decomp.weights],
        "dropped": decomp.dropped,
        "terms": [
            {
                "weight": float(w),
                "factor_a": matrix_to_obj(fa),
                "factor_b": matrix_to_obj(fb),
            }
            for w, fa, fb in zip(decomp.weights, decomp.factors_a, decomp.factors_b)
        ],
    }


def _cmd_ppt(args):
    matrix, file_dims = _load(args)
    dims = _resolve_dims(args, file_dims, matrix.shape[0])
    check = ppt_check(matrix, dims, args.tol)
    code = 0 if check.is_psd else 1
    return code, {
        "command": "ppt",
        "is_ppt": check.is_psd,
        "min_eigenvalue": check.min_eigenvalue,
    }


def _cmd_partial_transpose(args):
    matrix, file_dims = _load(args)
    dims = _resolve_dims(args, file_dims, matrix.shape[0])
    transposed = partial_transpose(matrix, dims, args.subsystem)
    return 0, {
        "command": "partial-transpose",
        "subsystem": args.subsystem,
        "matrix": matrix_to_obj(transposed, dims),
    }


def _cmd_commute_approx(args):
    a_list = []
    for path in args.infile:
        doc = load_matrix(path)
        a_list.append(symmetrize(doc.matrix) if args.symmetrize else doc.matrix)
    b_list = []
    for path in args.infile2:
        doc = load_matrix(path)
        b_list.append(symmetrize(doc.matrix) if args.symmetrize else doc.matrix)
    approximant, distance = commuting_family_approx(a_list, b_list, args.tol, args.seed)
    return 0, {
        "command": "commute-approx",
        "terms": len(a_list),
        "approximant": matrix_to_obj(approximant),
        "distance": distance,
    }


def _cmd_bound_report(args):
    matrix, file_dims = _load(args)
    dims = _resolve_dims(args, file_dims, matrix.shape[0])
    decomp = operator_schmidt(matrix, dims, args.tol)
    report = tensor_sum_bound_report(decomp, args.tol)
    code = 0 if report.satisfied else 1
    return code, {
        "command": "bound-report",
        "dims": list(dims),
        "terms": decomp.nterms,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "satisfied": report.satisfied,
        "hypothesis_held": report.hypothesis_held,
    }


def _cmd_weyl(args):
    triple = spectrum_triple(args.alpha, args.beta, args.gamma)
    report = weyl_check(triple, args.tol)
    code = 0 if not report.violations else 1
    return code, {
        "command": "weyl",
        "checked": report.checked,
        "trace_residual": report.trace_residual,
        "violations": _violations_obj(report),
    }


def _cmd_horn(args):
    triple = spectrum_triple(args.alpha, args.beta, args.gamma)
    report = horn_check(triple, args.tol)
    code = 0 if report.ok(args.tol) else 1
    return code, {
        "command": "horn",
        "checked": report.checked,
        "trace_residual": report.trace_residual,
        "violations": _violations_obj(report),
    }


def _cmd_horn_sets(args):
    tset = horn_sets(args.n, args.r)
    return 0, {
        "command": "horn-sets",
        "n": tset.n,
        "r": tset.r,
        "count": len(tset),
        "triples": [[list(i), list(j), list(k)] for i, j, k in tset],
    }


def _cmd_practical_bounds(args):
    intervals = practical_bounds(args.alpha, args.beta)
    return 0, {
        "command": "practical-bounds",
        "intervals": [[lo, hi] for lo, hi in intervals],
    }


def _cmd_oracle_sum(args):
    triple = sum_spectrum_oracle(args.alpha, args.beta, seed=args.seed, tol=args.tol)
    return 0, {
        "command": "oracle-sum",
        "alpha": [float(x) for x in triple.alpha],
        "beta": [float(x) for x in triple.beta],
        "gamma": [float(x) for x in triple.gamma],
    }


def _cmd_simdiag(args):
    family = []
    for path in args.infile:
        doc = load_matrix(path)
        family.append(symmetrize(doc.matrix) if args.symmetrize else doc.matrix)
    q, diagonals = simultaneous_diag(family, args.tol, args.seed)
    return 0, {
        "command": "simdiag",
        "q": matrix_to_obj(q),
        "diagonals": [[float(x) for x in d] for d in diagonals],
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psdkit",
        description="Nearest-PSD approximation, tensor splits, separability "
        "checks, and Horn/Weyl spectra bounds for Hermitian matrices.",
    )
    parser.add_argument("--version", action="version", version=f"psdkit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL,
                        help="numerical tolerance (default 1e-10)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized operations (default 0)")
    common.add_argument("--format", choices=("json", "pretty"), default="json",
                        help="report format (default json)")
    common.add_argument("--symmetrize", action="store_true",
                        help="replace loaded matrices by (A + A^dagger)/2")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, handler, help_text, **kwargs):
        p = sub.add_parser(name, parents=[common], help=help_text, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("split", _cmd_split, "positive/negative spectral split of a Hermitian matrix")
    p.add_argument("--in", dest="infile", required=True, help="matrix file, or - for stdin")

    p = add("nearest-psd", _cmd_nearest_psd, "closest PSD matrix and Frobenius distance")
    p.add_argument("--in", dest="infile", required=True)

    p = add("is-psd", _cmd_is_psd, "PSD test with minimum eigenvalue (exit 1 when not PSD)")
    p.add_argument("--in", dest="infile", required=True)

    p = add("tensor-split", _cmd_tensor_split, "split of b (x) c from factor splits")
    p.add_argument("--in", dest="infile", required=True, help="left factor")
    p.add_argument("--in2", dest="infile2", required=True, help="right factor")

    p = add("tensor-nearest", _cmd_tensor_nearest, "closest PSD matrix to b (x) c")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--in2", dest="infile2", required=True)

    p = add("schmidt", _cmd_schmidt, "operator-Schmidt decomposition of a bipartite operator")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--dims", type=int, nargs=2, metavar=("M", "N"))

    p = add("ppt", _cmd_ppt, "PPT criterion for a density matrix (exit 1 when it fails)")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--dims", type=int, nargs=2, metavar=("M", "N"))

    p = add("partial-transpose", _cmd_partial_transpose, "partial transpose of one factor")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--dims", type=int, nargs=2, metavar=("M", "N"))
    p.add_argument("--subsystem", choices=("first", "second"), default="second")

    p = add("commute-approx", _cmd_commute_approx,
            "term-by-term PSD approximant of a commuting Kronecker sum")
    p.add_argument("--in", dest="infile", action="append", required=True,
                   help="left-family member (repeatable)")
    p.add_argument("--in2", dest="infile2", action="append", required=True,
                   help="right-family member (repeatable)")

    p = add("bound-report", _cmd_bound_report,
            "Schmidt-term product bound on ||A - A_plus||_F (exit 1 when unsatisfied)")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--dims", type=int, nargs=2, metavar=("M", "N"))

    p = add("weyl", _cmd_weyl, "Weyl inequalities for spectra of a sum")
    p.add_argument("--alpha", type=_eig_list, required=True)
    p.add_argument("--beta", type=_eig_list, required=True)
    p.add_argument("--gamma", type=_eig_list, required=True)

    p = add("horn", _cmd_horn, "all Horn inequalities plus the trace identity")
    p.add_argument("--alpha", type=_eig_list, required=True)
    p.add_argument("--beta", type=_eig_list, required=True)
    p.add_argument("--gamma", type=_eig_list, required=True)

    p = add("horn-sets", _cmd_horn_sets, "enumerate the Horn triple set T_r^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("practical-bounds", _cmd_practical_bounds,
            "per-position envelopes for the spectrum of a sum")
    p.add_argument("--alpha", type=_eig_list, required=True)
    p.add_argument("--beta", type=_eig_list, required=True)

    p = add("oracle-sum", _cmd_oracle_sum,
            "spectrum of a seeded random sum with prescribed summand spectra")
    p.add_argument("--alpha", type=_eig_list, required=True)
    p.add_argument("--beta", type=_eig_list, required=True)

    p = add("simdiag", _cmd_simdiag, "simultaneous diagonalization of a commuting family")
    p.add_argument("--in", dest="infile", action="append", required=True,
                   help="family member (repeatable)")

    return parser


def _pretty_matrix(obj: dict, indent: str) -> list[str]:
    rows, cols = obj["rows"], obj["cols"]
    data = obj["data"]
    lines = []
    for i in range(rows):
        cells = []
        for j in range(cols):
            re, im = data[i * cols + j]
            cells.append(f"{re:.10g}{im:+.10g}j")
        lines.append(indent + "  ".join(cells))
    return lines


def _pretty_lines(value, key: str | None = None, indent: str = "") -> list[str]:
    label = f"{indent}{key}: " if key is not None else indent
    if isinstance(value, dict):
        if {"rows", "cols", "data"} <= set(value):
            header = f"{indent}{key} ({value['rows']}x{value['cols']}):"
            return [header] + _pretty_matrix(value, indent + "  ")
        lines = [f"{indent}{key}:"] if key is not None else []
        inner = indent + "  " if key is not None else indent
        for k, v in value.items():
            lines.extend(_pretty_lines(v, k, inner))
        return lines
    if isinstance(value, list):
        if all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value):
            return [label + ", ".join(f"{x:.12g}" for x in value)]
        lines = [f"{indent}{key}: [{len(value)} items]"]
        for idx, item in enumerate(value):
            lines.extend(_pretty_lines(item, f"[{idx}]", indent + "  "))
        return lines
    if isinstance(value, float):
        return [label + f"{value:.12g}"]
    return [label + str(value)]


def _emit(report: dict, fmt: str) -> None:
    if fmt == "pretty":
        for line in _pretty_lines(report):
            print(line)
    else:
        print(json.dumps(report, indent=2))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        code, report = args.handler(args)
    except (PsdkitError, ValueError) as exc:
        report = {
            "command": args.command,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        _emit(report, args.format)
        print(f"psdkit: error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.format)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
