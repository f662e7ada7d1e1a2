"""
q-Kostant partition functions and alternating sums
==================================================
"""

from qweight import GL_A, STANDARD, kl_poly, positive_roots, q_kostant, stable_kl_poly, weyl_group

rs = positive_roots("C", 2)
print("positive roots of C2:", rs.positive)

# 2e1 = 2e1 = (e1-e2)+(e1+e2) = 2(e1-e2)+2e2
print("P_q(2e1)      =", q_kostant((2, 0), rs))
# the gl_n length function only counts roots e_i - e_j
print("P_q^glA(2e1)  =", q_kostant((2, 0), rs, GL_A))

print("|W(C3)| =", sum(1 for _ in weyl_group("C", 3)))

# shifting both weights by (k, k) settles on the symmetric-group-only sum
print("stable:", stable_kl_poly("C", 2, (2, 1), (1,)))
for k in range(4):
    print(k, kl_poly("C", 2, (2 + k, 1 + k), (1 + k, k)))

# type A gives Kostka-Foulkes polynomials
print("A3, (2,1) vs (1,1,1):", kl_poly("A", 3, (2, 1), (1, 1, 1), STANDARD))
