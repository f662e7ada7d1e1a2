"""
Box case: KL polynomials against tensor energies
================================================

For mu = ((g-1)^n) the q-weight multiplicity KL_{lam,mu} should equal the
energy generating function of the highest box tensors of the
complementary weight.
"""

from qweight import kl_poly, rect_complement, x_polynomial_boxcase
from qweight.roots import partitions_in_box
from qweight.ssot import x_polynomial_via_ssot

n, g = 3, 2
for lam in partitions_in_box(n, g):
    lt = rect_complement(lam, g, n)
    left = kl_poly("C", n, lam, [g - 1] * n)
    right = x_polynomial_boxcase(lt, n, g)
    same = "ok" if left == right == x_polynomial_via_ssot(lt, n, g) else "DIFFERENT"
    print(f"{str(lam):10} ~{str(lt):10} {str(left):22} {same}")
