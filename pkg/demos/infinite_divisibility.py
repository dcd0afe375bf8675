"""Infinite divisibility: which band matrices keep every positive power?

For tridiagonal matrices the characterization is a zero pattern: PSD plus
no two consecutive nonzero off-diagonal entries, i.e. the matrix is block
diagonal with PSD blocks of order at most 2.  The pentadiagonal family
inherits the same rule along each parity class of its second diagonal.
"""

import numpy as np

from bandpos import (
    DenseSymMatrix,
    classify_positivity,
    determinant,
    hadamard_power,
    id_blocks,
    id_numeric_probe,
    is_id_pentadiagonal,
    is_id_tridiagonal,
    make_pentadiagonal,
    make_tridiagonal,
    polynomial_apply,
)


def banner(text):
    print()
    print("=" * 72)
    print(text)
    print("=" * 72)


banner("Two consecutive couplings ruin small powers")
t_bad = make_tridiagonal([1, 2, 1], [1, 1])
print("T =\n", t_bad.dense().astype(int))
print("is_id_tridiagonal:", is_id_tridiagonal(t_bad))
for r in (0.5, 0.1, 0.05):
    lam = classify_positivity(hadamard_power(t_bad, r)).min_eigenvalue
    print(f"  r = {r}: min eigenvalue of T^or = {lam:.6f}")
print("as r -> 0 the powered matrix approaches the 0/1 pattern matrix,")
print("which has determinant -1; small powers are already indefinite.")

banner("Blocks of order <= 2 are harmless")
t_good = make_tridiagonal([1, 1, 5], [1, 0])
print("T =\n", t_good.dense().astype(int))
print("is_id_tridiagonal:", is_id_tridiagonal(t_good))
print("block orders:", [b.order for b in id_blocks(t_good)])
print("numeric probe over the default exponent grid:", id_numeric_probe(t_good))

banner("Pentadiagonal: the rule holds per parity class")
p = make_pentadiagonal([1, 2, 2, 1, 1], [1, 1, 1])
print("P second diagonal (1, 1, 1): odd-position entries 1 and 3 are both nonzero")
print("is_id_pentadiagonal:", is_id_pentadiagonal(p))
p_ok = make_pentadiagonal([1.0, 1.0, 2.0, 1.0, 1.0], [1.0, 0.5, 0.0])
print("second diagonal (1, 0.5, 0):", "is_id =", is_id_pentadiagonal(p_ok))

banner("ID matrices are closed under polynomials with nonnegative coefficients")
f_ordinary = polynomial_apply(t_good, [1.0, 2.0, 1.0], "ordinary")
f_hadamard = polynomial_apply(t_good, [1.0, 2.0, 1.0], "hadamard")
print("I + 2T + T^2 passes the probe:", id_numeric_probe(f_ordinary))
print("I + 2T + T^o2 passes the probe:", id_numeric_probe(f_hadamard))

banner("Beyond bands: the probe is a necessary condition only")
cauchy = DenseSymMatrix(np.array([[1.0 / (i + j) for j in range(1, 4)] for i in range(1, 4)]))
print("Cauchy [1/(i+j)] passes the probe:", id_numeric_probe(cauchy))
square = DenseSymMatrix(cauchy.entries @ cauchy.entries)
print("its ordinary square at r = 1/4: det =",
      f"{determinant(hadamard_power(square, 0.25)):.3e}",
      "-> probe:", id_numeric_probe(square))
print("(a True probe is evidence, not a certificate; the pattern rules certify)")
