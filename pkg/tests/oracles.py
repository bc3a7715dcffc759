"""Independent oracles for the test suite.

Closed-form characteristic-polynomial eigenvalues for 2x2 and 3x3 Hermitian
matrices, and a brute-force grid search over PSD Cholesky factors for the
2x2 real symmetric nearest-PSD problem.  Nothing here touches the library's
eigensolver or split code paths.
"""

import math

import numpy as np


def eig2_closed(a) -> list[float]:
    """Roots of the 2x2 characteristic polynomial, sorted descending."""
    a = np.asarray(a, dtype=complex)
    tr = (a[0, 0] + a[1, 1]).real
    det = (a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]).real
    disc = math.sqrt(max(tr * tr / 4.0 - det, 0.0))
    return [tr / 2.0 + disc, tr / 2.0 - disc]


def _det3(m) -> complex:
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def eig3_closed(a) -> list[float]:
    """Trigonometric closed form for 3x3 Hermitian eigenvalues, descending."""
    a = np.asarray(a, dtype=complex)
    p1 = abs(a[0, 1]) ** 2 + abs(a[0, 2]) ** 2 + abs(a[1, 2]) ** 2
    q = (a[0, 0] + a[1, 1] + a[2, 2]).real / 3.0
    if p1 == 0.0:
        return sorted([a[0, 0].real, a[1, 1].real, a[2, 2].real], reverse=True)
    p2 = (
        (a[0, 0].real - q) ** 2
        + (a[1, 1].real - q) ** 2
        + (a[2, 2].real - q) ** 2
        + 2.0 * p1
    )
    p = math.sqrt(p2 / 6.0)
    b = (a - q * np.eye(3)) / p
    r = min(1.0, max(-1.0, _det3(b).real / 2.0))
    phi = math.acos(r) / 3.0
    lam1 = q + 2.0 * p * math.cos(phi)
    lam3 = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    lam2 = 3.0 * q - lam1 - lam3
    return sorted([lam1, lam2, lam3], reverse=True)


def closed_form_eigs(a) -> list[float]:
    n = np.asarray(a).shape[0]
    if n == 2:
        return eig2_closed(a)
    if n == 3:
        return eig3_closed(a)
    raise ValueError(f"no closed form wired up for n={n}")


def grid_search_nearest(a, step: float, box=None, center=None, halfwidth=None):
    """Minimize ||A - L L^T||_F over a grid of 2x2 lower-triangular L.

    L = [[x, 0], [y, z]] with x, z >= 0.  Either a full bracketing ``box``
    (x in [0, box], y in [-box, box], z in [0, box]) or a local window
    around ``center`` with the given ``halfwidth`` is scanned.  Returns
    (min distance, argmin (x, y, z)).
    """
    a = np.asarray(a, dtype=float)
    a11, a12, a22 = a[0, 0], a[0, 1], a[1, 1]
    if center is None:
        xs = np.arange(0.0, box + step, step)
        ys = np.arange(-box, box + step, step)
        zs = np.arange(0.0, box + step, step)
    else:
        cx, cy, cz = center
        xs = np.arange(max(cx - halfwidth, 0.0), cx + halfwidth + step, step)
        ys = np.arange(cy - halfwidth, cy + halfwidth + step, step)
        zs = np.arange(max(cz - halfwidth, 0.0), cz + halfwidth + step, step)
    xg = xs[:, None, None]
    yg = ys[None, :, None]
    zg = zs[None, None, :]
    b11 = xg * xg
    b12 = xg * yg
    b22 = yg * yg + zg * zg
    d2 = (a11 - b11) ** 2 + 2.0 * (a12 - b12) ** 2 + (a22 - b22) ** 2
    flat = int(np.argmin(d2))
    i, j, k = np.unravel_index(flat, d2.shape)
    return float(math.sqrt(d2[i, j, k])), (float(xs[i]), float(ys[j]), float(zs[k]))
