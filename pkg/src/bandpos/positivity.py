"""Numerical positivity oracle.

Eigenvalues of symmetric tridiagonal matrices are found by Sturm-sequence
bisection, which certifies how many eigenvalues lie below any pivot; dense
symmetric matrices are first reduced to tridiagonal form by Householder
reflections.  Leading principal minors come from Gaussian elimination, in
exact rational arithmetic when the input entries are rationals.

This module is deliberately independent of the chain-sequence criteria in
``chainseq``: the two are validated against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bandmat import BandSymMatrix, DenseSymMatrix, to_dense_array

__all__ = [
    "PD",
    "PSD_BOUNDARY",
    "INDEFINITE",
    "DEFAULT_TOL",
    "PositivityVerdict",
    "sym_tridiag_eigenvalues",
    "sym_eigenvalues",
    "min_eigenvalue",
    "classify_positivity",
    "leading_principal_minors",
    "determinant",
    "shift_to_pd",
    "shift_to_boundary",
]

PD = "PD"
PSD_BOUNDARY = "PSD_BOUNDARY"
INDEFINITE = "INDEFINITE"

DEFAULT_TOL = 1e-10

# Exact minors are only attempted up to this order; beyond it the Fraction
# arithmetic cost is no longer worth the certainty.
EXACT_MINOR_LIMIT = 12


@dataclass(frozen=True)
class PositivityVerdict:
    """Classification of a symmetric matrix with a numeric certificate.

    classification is PD when the smallest eigenvalue clears
    +tol*max(1, scale), INDEFINITE when it clears the same margin below
    zero, and PSD_BOUNDARY in between; scale is the max-norm of the matrix
    and certificate holds the leading principal minors.
    """

    classification: str
    min_eigenvalue: float
    scale: float
    certificate: tuple[float, ...]

    @property
    def is_psd(self) -> bool:
        return self.classification in (PD, PSD_BOUNDARY)


def _negcount(diag: np.ndarray, off2: np.ndarray, x: float, pivmin: float) -> int:
    """Number of eigenvalues below x, by the Sturm sequence of T - xI."""
    count = 0
    q = 1.0
    for i in range(diag.shape[0]):
        if i == 0:
            q = diag[0] - x
        else:
            q = diag[i] - x - off2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def _tridiag_bisect(diag: np.ndarray, off: np.ndarray, width: float, indices) -> list[float]:
    """Bisect the requested eigenvalues (0-based, ascending) of the
    tridiagonal matrix to brackets of the given width, using Gershgorin
    bounds as the initial bracket."""
    n = diag.shape[0]
    if n == 1:
        return [float(diag[0]) for _ in indices]
    off2 = off * off
    pivmin = max(float(off2.max()), 1.0) * 1e-290
    radius = np.zeros(n)
    radius[:-1] += np.abs(off)
    radius[1:] += np.abs(off)
    lo = float(np.min(diag - radius))
    hi = float(np.max(diag + radius))
    pad = width + 1e-14 * max(abs(lo), abs(hi), 1.0)
    lo -= pad
    hi += pad
    out = []
    for k in indices:
        a, b = lo, hi
        while b - a > width:
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break  # float resolution reached before the requested width
            if _negcount(diag, off2, mid, pivmin) <= k:
                a = mid
            else:
                b = mid
        out.append(0.5 * (a + b))
    return out


def sym_tridiag_eigenvalues(t: BandSymMatrix, tol: float = DEFAULT_TOL) -> np.ndarray:
    """All eigenvalues of a symmetric tridiagonal matrix, ascending, each
    bracketed by Sturm bisection to width <= tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not isinstance(t, BandSymMatrix) or t.bandwidth != 1:
        raise ValueError("expected a tridiagonal BandSymMatrix")
    vals = _tridiag_bisect(t.main_diag, t.off_diags[0], float(tol), range(t.order))
    return np.array(sorted(vals))


def _householder_tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce a dense symmetric matrix to tridiagonal form; returns the
    diagonal and first off-diagonal of the similar tridiagonal matrix."""
    m = np.array(a, dtype=float, copy=True)
    n = m.shape[0]
    for k in range(n - 2):
        x = m[k + 1 :, k].copy()
        nx = math.sqrt(float(np.dot(x, x)))
        if nx == 0.0:
            continue
        v = x.copy()
        v[0] += math.copysign(nx, x[0]) if x[0] != 0.0 else nx
        nv = math.sqrt(float(np.dot(v, v)))
        if nv == 0.0:
            continue
        v /= nv
        col = x - 2.0 * v * float(np.dot(v, x))
        m[k + 1 :, k] = col
        m[k, k + 1 :] = col
        sub = m[k + 1 :, k + 1 :]
        w = sub @ v
        c = float(np.dot(v, w))
        sub -= 2.0 * np.outer(v, w) + 2.0 * np.outer(w, v) - 4.0 * c * np.outer(v, v)
    return np.diag(m).copy(), np.diag(m, 1).copy()


def _as_symmetric_dense(a) -> np.ndarray:
    dense = to_dense_array(a)
    if not isinstance(a, (BandSymMatrix, DenseSymMatrix)):
        if not np.array_equal(dense, dense.T):
            raise ValueError("matrix is not symmetric")
    return dense


def sym_eigenvalues(a, tol: float = DEFAULT_TOL) -> np.ndarray:
    """All eigenvalues of a symmetric matrix (band or dense), ascending;
    brackets of width <= tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if isinstance(a, BandSymMatrix) and a.bandwidth == 1:
        return sym_tridiag_eigenvalues(a, tol)
    dense = _as_symmetric_dense(a)
    diag, off = _householder_tridiagonalize(dense)
    vals = _tridiag_bisect(diag, off, float(tol), range(dense.shape[0]))
    return np.array(sorted(vals))


def min_eigenvalue(a, tol: float = DEFAULT_TOL) -> float:
    """Smallest eigenvalue to absolute accuracy tol * max(1, max-norm)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if isinstance(a, BandSymMatrix) and a.bandwidth == 1:
        scale = max(1.0, float(np.abs(a.dense()).max()))
        return _tridiag_bisect(a.main_diag, a.off_diags[0], tol * scale, [0])[0]
    dense = _as_symmetric_dense(a)
    scale = max(1.0, float(np.abs(dense).max()) if dense.size else 0.0)
    diag, off = _householder_tridiagonalize(dense)
    return _tridiag_bisect(diag, off, tol * scale, [0])[0]


def classify_positivity(a, tol: float = DEFAULT_TOL) -> PositivityVerdict:
    """Classify a symmetric matrix as PD, PSD_BOUNDARY, or INDEFINITE.

    Deterministic for fixed input and tol: the verdict compares the
    bisected smallest eigenvalue against +-tol*max(1, max-norm).
    """
    dense = _as_symmetric_dense(a)
    scale = float(np.abs(dense).max())
    lam = min_eigenvalue(a, tol)
    thr = tol * max(1.0, scale)
    if lam > thr:
        cls = PD
    elif lam < -thr:
        cls = INDEFINITE
    else:
        cls = PSD_BOUNDARY
    minors = tuple(float(d) for d in leading_principal_minors(dense))
    return PositivityVerdict(cls, lam, scale, minors)


def _det_float(a: np.ndarray) -> float:
    """Determinant by partial-pivot Gaussian elimination (deterministic)."""
    m = np.array(a, dtype=float, copy=True)
    n = m.shape[0]
    sign = 1.0
    for c in range(n):
        piv = c + int(np.argmax(np.abs(m[c:, c])))
        if m[piv, c] == 0.0:
            return 0.0
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
            sign = -sign
        f = m[c + 1 :, c] / m[c, c]
        m[c + 1 :, c:] -= np.outer(f, m[c, c:])
    return sign * float(np.multiply.reduce(np.diag(m)))


def _det_exact(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for cc in range(c, n):
                    m[r][cc] -= f * m[c][cc]
    det = Fraction(sign)
    for c in range(n):
        det *= m[c][c]
    return det


def _exact_rows(a) -> list[list[Fraction]] | None:
    """Nested Fraction rows when the input carries exact rational entries."""
    if isinstance(a, np.ndarray) and a.dtype != object:
        return None
    if isinstance(a, (BandSymMatrix, DenseSymMatrix)):
        return None
    rows = list(a)
    out = []
    for row in rows:
        r = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
                return None
            r.append(Fraction(x))
        out.append(r)
    if any(len(r) != len(out) for r in out):
        return None
    return out


def leading_principal_minors(a) -> list:
    """Determinants of the top-left k x k blocks, k = 1..n.

    When the entries are ints or Fractions (and n <= 12) the minors are
    computed exactly and returned as Fractions; otherwise floats.
    """
    try:
        rows = _exact_rows(a)
    except TypeError:
        rows = None
    if rows is not None and len(rows) <= EXACT_MINOR_LIMIT:
        return [_det_exact([r[: k + 1] for r in rows[: k + 1]]) for k in range(len(rows))]
    dense = to_dense_array(a)
    return [_det_float(dense[: k + 1, : k + 1]) for k in range(dense.shape[0])]


def determinant(a) -> float:
    """Determinant of a (band or dense) square matrix."""
    return _det_float(to_dense_array(a))


def _add_to_diagonal(a, t: float):
    if isinstance(a, BandSymMatrix):
        return BandSymMatrix(a.order, a.bandwidth, a.main_diag + t, a.off_diags)
    if isinstance(a, DenseSymMatrix):
        return DenseSymMatrix(a.entries + t * np.eye(a.order))
    dense = np.asarray(a, dtype=float)
    return dense + t * np.eye(dense.shape[0])


def shift_to_pd(a, eps: float):
    """Return a + eps*I (eps > 0).  A PSD input becomes PD; the
    off-diagonal zero pattern is unchanged."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return _add_to_diagonal(a, float(eps))


def shift_to_boundary(a, tol: float = DEFAULT_TOL):
    """For PD input A, return (A - lam*I, lam) where lam is the smallest
    eigenvalue; the first component is PSD with minimum eigenvalue 0
    (within tol) and keeps A's off-diagonal zero pattern."""
    verdict = classify_positivity(a, tol)
    if verdict.classification != PD:
        raise ValueError("matrix is not positive definite")
    lam = verdict.min_eigenvalue
    return _add_to_diagonal(a, -lam), lam
