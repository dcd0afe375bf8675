"""Hadamard-power preservation for band families.

The exponents preserving positive (semi)definiteness of every nonnegative
tridiagonal matrix of order n >= 3 are exactly [1, oo), and the same holds
for the pentadiagonal family (zero first off-diagonal) of order n >= 5; for
pentadiagonal orders 3 and 4 every exponent r >= 0 preserves positivity.
This module exposes those sets, builds the explicit counterexamples that
fail below exponent 1, decides infinite divisibility, and provides a seeded
random probe that searches for falsifying matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bandmat import (
    BandSymMatrix,
    DenseSymMatrix,
    Matrix,
    hadamard_power,
    join_pentadiagonal,
    make_pentadiagonal,
    make_tridiagonal,
    matrix_to_json_obj,
    to_dense_array,
)
from .positivity import DEFAULT_TOL, INDEFINITE, classify_positivity, min_eigenvalue

__all__ = [
    "PowerSet",
    "ProbeReport",
    "DEFAULT_ID_GRID",
    "tridiag_preserver_set",
    "penta_preserver_set",
    "counterexample_tridiagonal",
    "counterexample_pentadiagonal",
    "random_pd_tridiagonal",
    "random_pd_pentadiagonal",
    "random_pd_pattern",
    "probe_preserves",
    "is_id_tridiagonal",
    "is_id_pentadiagonal",
    "id_blocks",
    "id_numeric_probe",
    "polynomial_apply",
]

# Exponents sampled by the necessary-condition probe for infinite
# divisibility.  Small exponents are where non-ID matrices break.
DEFAULT_ID_GRID = (0.05, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0)

# Off-diagonal entries at or below this magnitude count as zero in the
# infinite-divisibility pattern tests (absolute: the pattern is about
# exact zeros).
ID_PATTERN_TOL = 1e-12

_PROBE_ORDER_RANGES = {"tridiagonal": (3, 12), "pentadiagonal": (5, 8)}


@dataclass(frozen=True)
class PowerSet:
    """A set of exponents of the form [t, oo) or N ∪ [t, oo).

    N is the positive integers {1, 2, ...}; when tail_threshold <= 1 the
    natural-number part is redundant and normalized()/render() collapse the
    set to a plain interval.
    """

    tail_threshold: float
    includes_naturals: bool = False

    def __post_init__(self):
        if self.tail_threshold < 0:
            raise ValueError("tail threshold must be nonnegative")
        object.__setattr__(self, "tail_threshold", float(self.tail_threshold))

    def contains(self, r: float) -> bool:
        r = float(r)
        if r >= self.tail_threshold:
            return True
        return self.includes_naturals and r >= 1 and r.is_integer()

    __contains__ = contains

    def normalized(self) -> "PowerSet":
        return PowerSet(self.tail_threshold, self.includes_naturals and self.tail_threshold > 1)

    def render(self) -> str:
        t = self.tail_threshold
        t_str = str(int(t)) if t.is_integer() else f"{t:.12g}"
        tail = f"[{t_str}, ∞)"
        if self.includes_naturals and t > 1:
            return f"ℕ ∪ {tail}"
        return tail


@dataclass(frozen=True, eq=False)
class ProbeReport:
    """Result of a seeded falsification probe.

    min_over_samples is the smallest post-power minimum eigenvalue seen and
    worst_case the matrix achieving it (ties broken by sample index, so the
    report is reproducible from the seed alone).
    """

    samples: int
    exponent: float
    min_over_samples: float
    worst_case: Matrix
    seed: int

    def to_json_obj(self) -> dict:
        return {
            "samples": self.samples,
            "exponent": self.exponent,
            "min_over_samples": self.min_over_samples,
            "worst_case": matrix_to_json_obj(self.worst_case),
            "seed": self.seed,
        }


def tridiag_preserver_set(n: int) -> PowerSet:
    """Exponents whose Hadamard power preserves PD/PSD for every
    nonnegative tridiagonal matrix of order n: the interval [1, oo)."""
    if n < 3:
        raise ValueError("preserver set is defined for order n >= 3")
    return PowerSet(1.0)


def penta_preserver_set(n: int) -> PowerSet:
    """Preserving exponents for the pentadiagonal family of order n:
    [0, oo) for n in {3, 4} and [1, oo) for n >= 5."""
    if n < 3:
        raise ValueError("preserver set is defined for order n >= 3")
    return PowerSet(0.0) if n <= 4 else PowerSet(1.0)


def counterexample_tridiagonal(r: float) -> BandSymMatrix:
    """A PD tridiagonal matrix whose Hadamard r-th power (0 < r < 1) is
    indefinite: tridiag([1, 2+eps, 1], [1, 1]) whose powered determinant is
    (2+eps)**r - 2.  eps is fixed at the midpoint of the open window
    (0, 2**(1/r) - 2) where that determinant is negative."""
    r = float(r)
    if not 0 < r < 1:
        raise ValueError("counterexamples exist only for 0 < r < 1")
    eps = (2.0 ** (1.0 / r) - 2.0) / 2.0
    return make_tridiagonal([1.0, 2.0 + eps, 1.0], [1.0, 1.0])


def counterexample_pentadiagonal(r: float) -> BandSymMatrix:
    """The fixed PSD pentadiagonal 5x5 with diagonal (1,2,2,1,1) and second
    diagonal (1,1,1); its powered determinant 2 - 3*2**r + 4**r is negative
    for every 0 < r < 1."""
    r = float(r)
    if not 0 < r < 1:
        raise ValueError("counterexamples exist only for 0 < r < 1")
    return make_pentadiagonal([1.0, 2.0, 2.0, 1.0, 1.0], [1.0, 1.0, 1.0])


def random_pd_tridiagonal(rng: np.random.Generator, order: int) -> BandSymMatrix:
    """Random PD tridiagonal matrix, PD by construction.

    Parameters g_k in (0, 1) are drawn first and turned into the chain
    sequence (1 - g_{k-1}) g_k of off-diagonal ratios, so the chain-sequence
    PD criterion holds with no rejection step and samples reach arbitrarily
    close to the PSD boundary.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    g = rng.uniform(0.05, 0.95, size=order)
    diag = rng.uniform(0.2, 3.0, size=order)
    if order == 1:
        return make_tridiagonal(diag, [])
    ratios = (1.0 - g[:-1]) * g[1:]
    off = np.sqrt(ratios * diag[:-1] * diag[1:])
    return make_tridiagonal(diag, off)


def random_pd_pentadiagonal(rng: np.random.Generator, order: int) -> BandSymMatrix:
    """Random PD pentadiagonal matrix assembled from two independent random
    PD tridiagonal blocks via the even/odd interleaving."""
    if order < 3:
        raise ValueError("order must be at least 3")
    odd = random_pd_tridiagonal(rng, (order + 1) // 2)
    even = random_pd_tridiagonal(rng, order // 2)
    return join_pentadiagonal(odd, even)


def random_pd_pattern(rng: np.random.Generator, graph) -> DenseSymMatrix:
    """Random PD matrix with nonnegative entries and the zero pattern of the
    given graph, built strictly diagonally dominant."""
    n = graph.n
    a = np.zeros((n, n))
    for i, j in sorted(graph.edges):
        a[i - 1, j - 1] = a[j - 1, i - 1] = rng.uniform(0.1, 2.0)
    slack = rng.uniform(0.1, 1.0, size=n)
    for k in range(n):
        a[k, k] = a[k].sum() + slack[k]
    return DenseSymMatrix(a)


def probe_preserves(
    family: str,
    r: float,
    samples: int,
    seed: int,
    tol: float = DEFAULT_TOL,
    order_range: tuple[int, int] | None = None,
    graph=None,
) -> ProbeReport:
    """Search for matrices in the family whose Hadamard r-th power is not
    PSD, over seeded random PSD samples.

    family is "tridiagonal", "pentadiagonal", or "graph" (the latter needs
    the graph argument).  Each sample gets its own generator seeded by
    (seed, index), so the result is independent of evaluation order.  For
    the band families with 0 < r < 1 the known counterexample is injected
    as sample 0, so the probe is guaranteed to falsify there.
    min_over_samples >= -tol certifies that no falsification was found.
    """
    r = float(r)
    if r <= 0:
        raise ValueError("exponent must be positive")
    if samples < 1:
        raise ValueError("at least one sample is required")
    family = family.lower()
    if family not in ("tridiagonal", "pentadiagonal", "graph"):
        raise ValueError(f"unknown family: {family!r}")
    if family == "graph" and graph is None:
        raise ValueError("graph family requires a graph")
    if order_range is None and family != "graph":
        order_range = _PROBE_ORDER_RANGES[family]
    inject = family != "graph" and r < 1
    best: float | None = None
    worst: Matrix | None = None
    for i in range(samples):
        rng = np.random.default_rng([seed, i])
        if i == 0 and inject:
            m = (
                counterexample_tridiagonal(r)
                if family == "tridiagonal"
                else counterexample_pentadiagonal(r)
            )
        elif family == "graph":
            m = random_pd_pattern(rng, graph)
        else:
            order = int(rng.integers(order_range[0], order_range[1] + 1))
            if family == "tridiagonal":
                m = random_pd_tridiagonal(rng, order)
            else:
                m = random_pd_pentadiagonal(rng, order)
        lam = min_eigenvalue(hadamard_power(m, r), tol)
        if best is None or lam < best:
            best = lam
            worst = m
    return ProbeReport(samples, r, best, worst, seed)


def _check_nonnegative(t) -> None:
    if t.min_entry() < 0:
        raise ValueError("matrix has a negative entry")


def _consecutive_nonzero(off: np.ndarray, tol: float) -> int | None:
    """Index i (1-based) with |b_i| > tol and |b_{i+1}| > tol, or None."""
    nz = np.abs(off) > tol
    for i in range(off.shape[0] - 1):
        if nz[i] and nz[i + 1]:
            return i + 1
    return None


def is_id_tridiagonal(t: BandSymMatrix, tol: float = ID_PATTERN_TOL) -> bool:
    """Infinite divisibility of a nonnegative tridiagonal matrix: PSD and no
    two consecutive nonzero off-diagonal entries (|b_i| > tol counts as
    nonzero)."""
    if not isinstance(t, BandSymMatrix) or t.bandwidth != 1:
        raise ValueError("expected a tridiagonal BandSymMatrix")
    _check_nonnegative(t)
    if _consecutive_nonzero(t.off_diags[0], tol) is not None:
        return False
    return classify_positivity(t).classification != INDEFINITE


def is_id_pentadiagonal(p: BandSymMatrix, tol: float = ID_PATTERN_TOL) -> bool:
    """Infinite divisibility for the pentadiagonal family: both parity
    subsequences of the second diagonal must avoid consecutive nonzeros and
    the matrix must be PSD; decided by splitting into the two tridiagonal
    blocks and testing each."""
    from .bandmat import split_pentadiagonal

    if not isinstance(p, BandSymMatrix) or not p.is_pentadiagonal_form:
        raise ValueError("expected a pentadiagonal BandSymMatrix with zero first off-diagonal")
    _check_nonnegative(p)
    odd, even = split_pentadiagonal(p)
    return is_id_tridiagonal(odd, tol) and is_id_tridiagonal(even, tol)


def id_blocks(t: BandSymMatrix, tol: float = ID_PATTERN_TOL) -> list[BandSymMatrix]:
    """Block-diagonal decomposition of an infinitely divisible tridiagonal
    matrix; every block has order 1 or 2 and is PSD."""
    from .chainseq import split_at_zero_offdiag

    if not is_id_tridiagonal(t, tol):
        raise ValueError("matrix is not infinitely divisible")
    return split_at_zero_offdiag(t, tol)


def id_numeric_probe(a, r_grid=None, tol: float = DEFAULT_TOL) -> bool:
    """Necessary-condition sampler for infinite divisibility: True iff the
    Hadamard r-th power is never classified INDEFINITE over the grid.

    A True result is not a proof of infinite divisibility (which quantifies
    over all r > 0); only the algebraic characterizations certify it.
    """
    if r_grid is None:
        r_grid = DEFAULT_ID_GRID
    grid = [float(r) for r in r_grid]
    if any(r <= 0 for r in grid):
        raise ValueError("probe grid must contain positive exponents only")
    dense = to_dense_array(a)
    if dense.min() < 0:
        raise ValueError("matrix has a negative entry")
    for r in grid:
        if classify_positivity(hadamard_power(a, r), tol).classification == INDEFINITE:
            return False
    return True


def polynomial_apply(t, coeffs, mode: str = "ordinary") -> DenseSymMatrix:
    """Polynomial in a symmetric matrix with nonnegative coefficients, in
    the ordinary sense sum c_k T**k or the Hadamard sense sum c_k T^(o k),
    with the k = 0 term meaning c_0 * I in both modes.

    Applied to an infinitely divisible tridiagonal matrix, either mode
    yields an infinitely divisible result.
    """
    coeffs = [float(c) for c in coeffs]
    if any(c < 0 for c in coeffs):
        raise ValueError("coefficients must be nonnegative")
    mode = mode.lower()
    if mode not in ("ordinary", "hadamard"):
        raise ValueError(f"unknown mode: {mode!r}")
    dense = to_dense_array(t)
    n = dense.shape[0]
    result = coeffs[0] * np.eye(n) if coeffs else np.zeros((n, n))
    if mode == "ordinary":
        power = np.eye(n)
        for c in coeffs[1:]:
            power = power @ dense
            result += c * power
        result = 0.5 * (result + result.T)
    else:
        for k, c in enumerate(coeffs[1:], start=1):
            result += c * dense**k
    return DenseSymMatrix(result)
