"""
Two independent constructions of the same orthogonal sequence
=============================================================

Gram-Schmidt on the monomials only ever touches the raw moments; the
Rodrigues recursion only ever touches (phi, psi).  If both are right,
the monic rescaling of the diagonal C_m(x; m) must land exactly on the
Gram-Schmidt output, and the classical three-term recurrence must
reassemble the sequence from its two coefficient lists.
"""

from fractions import Fraction

from copoly import (
    complementary,
    cross_validate,
    gram_schmidt_ops,
    hankel_determinant,
    hermite_family,
    jacobi_family,
    orthogonality_matrix,
    pair_from_family,
    three_term_coefficients,
)

pair = pair_from_family(hermite_family(), max_order=40)
DEPTH = 6

ops = gram_schmidt_ops(pair.u, DEPTH)
print("monic hermite sequence from moments alone:")
for m, p in enumerate(ops.polys):
    print(f"  P_{m} = {p},   <u, P^2> = {ops.norms[m]}")

# The squared norms are ratios of consecutive Hankel determinants
# (with the empty determinant taken as 1).
print("norms equal hankel ratios:",
      all(ops.norms[m] == hankel_determinant(pair.u, m)
          / (hankel_determinant(pair.u, m - 1) if m else Fraction(1))
          for m in range(DEPTH + 1)))

# Orthogonality, stated as a matrix: off-diagonal pairings vanish.
gram = orthogonality_matrix(pair.u, ops.polys)
print("gram matrix is diagonal:",
      all(gram[i][j] == 0 for i in range(len(gram))
          for j in range(len(gram)) if i != j))

# Three-term recurrence P_{m+1} = (x - a_m) P_m - b_m P_{m-1}.  For the
# Gaussian weight every a_m is zero by symmetry.
coeffs = three_term_coefficients(ops)
print("recurrence coefficients (a_m, b_m):",
      [(str(a), str(b)) for a, b in coeffs[:4]])

# cross_validate does the full comparison in one call: it rescales each
# diagonal row to monic form and insists on exact equality.
report = cross_validate(pair, DEPTH)
print("diagonals match gram-schmidt:", report.max_degree == DEPTH)
scale = complementary(pair, 3, 3).leading_coefficient
print("C_3(x;3) leading coefficient:", scale, "(the monic rescale factor)")

# Same game for a nonsymmetric family; here the a_m drift with m.
pair = pair_from_family(jacobi_family(Fraction(1, 3), 2), max_order=40)
coeffs = three_term_coefficients(gram_schmidt_ops(pair.u, 4))
print("jacobi(1/3, 2) a_m:", [str(a) for a, _ in coeffs])
