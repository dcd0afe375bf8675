"""Finite chain sequences and the positive-definiteness criterion they give
for tridiagonal matrices.

A finite sequence (a_1, ..., a_N) is a chain sequence when it can be written
a_k = (1 - g_{k-1}) g_k with 0 <= g_0 < 1 and 0 < g_k < 1.  Existence of any
such parameters is equivalent to the minimal choice g_0 = 0 staying inside
(0, 1) along the recursion m_k = a_k / (1 - m_{k-1}); that recursion is the
decision procedure used here.

A tridiagonal matrix with positive diagonal a_i and off-diagonal b_j is
positive definite exactly when the ratios b_j**2 / (a_j a_{j+1}) form a
chain sequence; zero off-diagonal entries split the matrix into irreducible
blocks that are tested independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bandmat import BandSymMatrix, make_tridiagonal

__all__ = [
    "ChainReport",
    "minimal_parameters",
    "is_chain_sequence",
    "comparison_dominates",
    "tridiag_ratio_sequence",
    "split_at_zero_offdiag",
    "wall_wetzel_pd",
]

# |m_k - 1| at or below this is reported as boundary-indeterminate in
# floating mode (the exact-rational mode needs no band).
BOUNDARY_TOL = 1e-12

# Inputs given as ints/Fractions run exactly up to this length.
EXACT_LENGTH_LIMIT = 32


@dataclass(frozen=True)
class ChainReport:
    """Outcome of the minimal-parameter chain-sequence test.

    minimal_params holds m_1..m_N on success and m_1..m_k up to the first
    failing index otherwise.  boundary_indeterminate flags a floating-mode
    m_k within BOUNDARY_TOL of 1, where the strict verdict is not reliable.
    """

    is_chain: bool
    minimal_params: tuple
    failure_index: int | None
    exact_mode: bool
    boundary_indeterminate: bool = False


def _is_exact_number(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def minimal_parameters(a) -> ChainReport:
    """Run the minimal-parameter recursion m_k = a_k / (1 - m_{k-1}).

    The sequence is a chain sequence iff every a_k > 0 and every m_k < 1.
    Int/Fraction input (up to length 32) is evaluated in exact rational
    arithmetic; m_k = 1 exactly is then classified not-a-chain, matching
    the strict inequality in the definition.
    """
    seq = list(a)
    if len(seq) < 1:
        raise ValueError("sequence must be nonempty")
    exact = len(seq) <= EXACT_LENGTH_LIMIT and all(_is_exact_number(x) for x in seq)
    params: list = []
    boundary = False
    prev = Fraction(0) if exact else 0.0
    for k, ak in enumerate(seq, start=1):
        if not exact:
            ak = float(ak)
        m = ak / (1 - prev)
        params.append(m)
        if ak <= 0:
            return ChainReport(False, tuple(params), k, exact, boundary)
        if not exact and abs(m - 1.0) <= BOUNDARY_TOL:
            boundary = True
        if m >= 1:
            return ChainReport(False, tuple(params), k, exact, boundary)
        prev = m
    return ChainReport(True, tuple(params), None, exact, boundary)


def is_chain_sequence(a) -> bool:
    """Convenience wrapper over minimal_parameters."""
    return minimal_parameters(a).is_chain


def comparison_dominates(c, a) -> bool:
    """True iff 0 < c_k <= a_k for all k: the hypothesis under which
    domination by a chain sequence makes c a chain sequence."""
    c, a = list(c), list(a)
    if len(c) != len(a):
        raise ValueError("sequences must have equal length")
    return all(0 < ck <= ak for ck, ak in zip(c, a))


def tridiag_ratio_sequence(t: BandSymMatrix) -> np.ndarray:
    """The ratios b_j**2 / (a_j a_{j+1}) for j = 1..n-1.

    Requires every diagonal entry positive; matrices with zero diagonal
    entries must go through block splitting and the eigenvalue oracle
    instead.
    """
    if not isinstance(t, BandSymMatrix) or t.bandwidth != 1:
        raise ValueError("expected a tridiagonal BandSymMatrix")
    diag = t.main_diag
    if not (diag > 0).all():
        raise ValueError("ratio criterion requires positive diagonal entries")
    off = t.off_diags[0]
    return off * off / (diag[:-1] * diag[1:])


def split_at_zero_offdiag(t: BandSymMatrix, tol: float = 0.0) -> list[BandSymMatrix]:
    """Maximal irreducible tridiagonal blocks, cutting wherever |b_j| <= tol
    (exact zeros by default).  Concatenating the blocks reconstructs t."""
    if not isinstance(t, BandSymMatrix) or t.bandwidth != 1:
        raise ValueError("expected a tridiagonal BandSymMatrix")
    diag = t.main_diag
    off = t.off_diags[0]
    blocks = []
    start = 0
    for j in range(off.shape[0]):
        if abs(off[j]) <= tol:
            blocks.append(make_tridiagonal(diag[start : j + 1], off[start:j]))
            start = j + 1
    blocks.append(make_tridiagonal(diag[start:], off[start : t.order - 1]))
    return blocks


def wall_wetzel_pd(t: BandSymMatrix) -> bool:
    """Chain-sequence test for positive definiteness of a nonnegative
    tridiagonal matrix.

    The matrix splits at zero off-diagonal entries into irreducible blocks;
    an order-1 block is PD iff its entry is positive, and a block with
    positive diagonal is PD iff its ratio sequence is a chain sequence.  A
    block with a nonpositive diagonal entry cannot be PD.
    """
    if not isinstance(t, BandSymMatrix) or t.bandwidth != 1:
        raise ValueError("expected a tridiagonal BandSymMatrix")
    if t.min_entry() < 0:
        raise ValueError("criterion applies to nonnegative matrices")
    for block in split_at_zero_offdiag(t):
        diag = block.main_diag
        if block.order == 1:
            if diag[0] <= 0:
                return False
            continue
        if not (diag > 0).all():
            return False
        if not is_chain_sequence(tridiag_ratio_sequence(block)):
            return False
    return True
